#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "urr/cert.hpp"
#include "urr/order.hpp"
#include "urr/poly.hpp"

namespace urr {

struct EngineLimits {
  std::size_t max_pairs = 200000;         // S-pairs processed per basis
  std::size_t max_reduction_steps = 200000;  // reduction steps per normal form
  std::size_t max_basis_size = 4000;
};

struct BasisOptions {
  bool track_cofactors = false;
  // Inter-reduce global bases into the unique reduced Groebner basis.
  bool reduce = true;
  EngineLimits limits{};
};

// Standard basis of the ideal generated by `source` for `order`. When
// cofactors are tracked, generators()[k] == sum_j representation()[k][j] *
// source()[j] exactly.
class StdBasis {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  const OrderSpec& order() const noexcept { return order_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return lms_; }
  const std::vector<Poly>& source() const noexcept { return source_; }
  bool reduced() const noexcept { return reduced_; }
  bool tracks_cofactors() const noexcept { return !reps_.empty() || gens_.empty(); }
  const std::vector<std::vector<Poly>>& representations() const noexcept { return reps_; }
  std::size_t size() const noexcept { return gens_.size(); }
  // Contains 1 (global) or a unit of the localization (local/mixed).
  bool is_unit_ideal() const noexcept;

 private:
  friend StdBasis std_basis(std::span<const Poly>, const OrderSpec&, const BasisOptions&);
  friend StdBasis std_basis_for(const RingPtr&, std::span<const Poly>, const OrderSpec&,
                                const BasisOptions&);

  StdBasis(RingPtr ring, OrderSpec order) : ring_(std::move(ring)), order_(std::move(order)) {}

  RingPtr ring_;
  OrderSpec order_;
  std::vector<Poly> gens_;
  std::vector<Monomial> lms_;
  std::vector<Poly> source_;
  std::vector<std::vector<Poly>> reps_;
  bool reduced_ = false;
};

// Buchberger loop with mora_weak_nf as the reduction step. Normal pair
// selection: smallest lcm degree, then smallest index pair. Throws
// LimitExceeded.
StdBasis std_basis(std::span<const Poly> gens, const OrderSpec& order,
                   const BasisOptions& options = {});
// Same, for a possibly empty generator list over `ring`.
StdBasis std_basis_for(const RingPtr& ring, std::span<const Poly> gens, const OrderSpec& order,
                       const BasisOptions& options = {});

// unit * f = sum_k cofactors[k] * basis.generators()[k] + remainder.
struct WeakNormalForm {
  Poly remainder;
  Poly unit;
  std::vector<Poly> cofactors;
};

// Mora normal form with ecart-driven reducer choice (smallest ecart, ties by
// basis index, then by insertion order of previously reduced intermediates).
// For global orders the unit is 1 and the remainder is fully reduced; otherwise
// only the leading monomial of the remainder is guaranteed irreducible.
WeakNormalForm mora_weak_nf(const Poly& f, const StdBasis& basis,
                            const EngineLimits& limits = {});

// Rewrites the cofactors of a normal form with zero remainder onto the
// basis' source generators. Requires basis.tracks_cofactors().
Cert source_cert(const Poly& f, const WeakNormalForm& nf, const StdBasis& basis,
                 std::optional<Point> point);

Poly spoly(const Poly& f, const Poly& g, const OrderSpec& order);

struct Membership {
  bool in = false;
  std::optional<Cert> cert;  // present iff in
};

// Membership in an ideal, optionally localized at a point. The point is
// moved to the origin internally; certificates are stated in the caller's
// coordinates over the caller's generator list.
class IdealMembership {
 public:
  IdealMembership(const RingPtr& ring, std::vector<Poly> gens, const OrderSpec& order,
                  std::optional<Point> center = std::nullopt, EngineLimits limits = {});

  Membership test(const Poly& f) const;
  // Unit and cofactors with respect to the caller's generators, for any f.
  WeakNormalForm normal_form(const Poly& f) const;

  const StdBasis& basis() const noexcept { return basis_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  const std::optional<Point>& center() const noexcept { return center_; }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::optional<Point> center_;
  EngineLimits limits_;
  StdBasis basis_;
};

// Requires a local or mixed order when `point` is given (PreconditionViolated).
Membership member(const Poly& f, std::span<const Poly> gens, const OrderSpec& order,
                  const std::optional<Point>& point = std::nullopt,
                  const EngineLimits& limits = {});

}  // namespace urr
