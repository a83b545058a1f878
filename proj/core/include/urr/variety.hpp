#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "urr/cert.hpp"
#include "urr/ideal.hpp"
#include "urr/matrix.hpp"

namespace urr {

// Affine variety X in K^n given by generators of its ideal. The dimension is
// verified against the Krull dimension at construction. Primality is an
// attestation by the caller and is not checked.
class VarietyPresentation {
 public:
  static VarietyPresentation make(const RingPtr& ring, std::vector<Poly> gens, std::size_t dim,
                                  bool assume_prime = true, const EngineLimits& limits = {});
  // K^n itself.
  static VarietyPresentation affine(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ideal_.ring(); }
  const Ideal& ideal() const noexcept { return ideal_; }
  const std::vector<Poly>& gens() const noexcept { return ideal_.gens(); }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t ambient_dim() const noexcept { return ring()->arity(); }
  bool assume_prime() const noexcept { return assume_prime_; }
  bool contains(const Point& p) const;

 private:
  VarietyPresentation(Ideal ideal, std::size_t dim, bool assume_prime)
      : ideal_(std::move(ideal)), dim_(dim), assume_prime_(assume_prime) {}

  Ideal ideal_;
  std::size_t dim_;
  bool assume_prime_;
};

// P/Q as a rational function on the ambient space.
struct Fraction {
  Poly num;
  Poly den;

  static Fraction of(const Poly& p) { return {p, Poly::constant(p.ring(), 1)}; }
};

// Germ at `point` of a regular function: den(point) != 0.
struct LocalFrac {
  Poly num;
  Poly den;
  Point point;

  // Throws PreconditionViolated when den vanishes at the point.
  static LocalFrac make(Poly num, Poly den, Point point);
  Rat value() const;
};

// Coordinates P_i/Q_i over the source ring, landing in `target`.
struct RationalMap {
  RingPtr source;
  std::vector<Fraction> coords;
  VarietyPresentation target;
};

// Throws PreconditionViolated if some denominator lies in the ideal of X.
void require_defined_on(const RationalMap& map, const VarietyPresentation& x);

// Rows are generator gradients at p.
Matrix jacobian_at(const std::vector<Poly>& gens, const Point& p);

// The remaining functions require p on X (PointNotOnVariety).
std::size_t jacobian_rank_at(const VarietyPresentation& x, const Point& p);
bool smooth_at(const VarietyPresentation& x, const Point& p);
// Kernel basis of the Jacobian at p.
std::vector<Point> tangent_space(const VarietyPresentation& x, const Point& p);

enum class Verdict { Regular, NotRegular, Undetermined };

struct Regularity {
  Verdict verdict = Verdict::Undetermined;
  std::optional<LocalFrac> rep;
  // Membership of P in (Q) + I(X) localized at p; generators are Q followed
  // by the generators of X, and the cofactor of Q is rep.num.
  std::optional<CertRecord> cert;
  std::string reason;
};

// Decides whether P/Q restricted to X is regular at p by a local normal form
// of P against a standard basis of (Q) + I(X) in a local order at p.
Regularity regular_on_X_at(const Poly& p_num, const Poly& q_den, const VarietyPresentation& x,
                           const Point& p, const EngineLimits& limits = {});

struct MapEquality {
  bool equal = false;
  // One record per coordinate when equal: Pf*Qg - Pg*Qf in I(X).
  std::vector<CertRecord> certs;
  std::optional<std::size_t> first_difference;
};

// Coordinatewise equality as rational functions on X (irreducible by
// attestation), decided by global membership of the cross products.
MapEquality maps_equal_on_X(const std::vector<Fraction>& f, const std::vector<Fraction>& g,
                            const VarietyPresentation& x, const EngineLimits& limits = {});

}  // namespace urr
