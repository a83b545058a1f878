#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "urr/sigma.hpp"

namespace urr {

// psi_i = a / b over the source ring, with b(x0) = 1.
struct LiftCandidate {
  Poly a;
  Poly b;
};

// Solution set of the jet system for one coordinate: unknown coefficients of
// A and B - 1 in the monomials of (y - x0) of degree <= D, subject to
// pi_i * B(sigma) - A(sigma) in H + m^N at (x0, 0).
class JetSpace {
 public:
  bool consistent() const noexcept { return solution_.has_value(); }
  std::size_t dimension() const noexcept { return consistent() ? solution_->directions.size() : 0; }
  // Particular solution first, then particular + each direction.
  std::vector<LiftCandidate> candidates() const;
  // Whether (a, b) in user coordinates satisfies the jet system.
  bool contains(const LiftCandidate& c) const;

  unsigned degree() const noexcept { return degree_; }
  unsigned order() const noexcept { return order_; }

 private:
  friend class JetSolver;

  LiftCandidate assemble(const std::vector<Rat>& x) const;

  RingPtr source_;
  Point x0_;
  unsigned degree_ = 0;
  unsigned order_ = 0;
  std::vector<Monomial> a_monos_;
  std::vector<Monomial> b_monos_;  // excludes the constant monomial
  Matrix system_;
  std::vector<Rat> rhs_;
  std::optional<AffineSolution> solution_;
};

// Truncated normal forms modulo H + m^N at (x0, 0), computed from a local
// standard basis of H translated to the origin. The normal form is linear in
// its argument and truncating commutes with it, so images are cached at the
// largest order requested.
class JetSolver {
 public:
  // Normal forms are computed at no less than `order_hint`. The solver keeps
  // a pointer to `sigma`.
  explicit JetSolver(const SigmaData& sigma, const EngineLimits& limits = {},
                     unsigned order_hint = 0);

  // Requires D >= 1 and N >= D + 1.
  JetSpace solve(std::size_t i, unsigned degree, unsigned order);
  // Exact local membership of pi_i * b(sigma) - a(sigma) in H at (x0, 0).
  std::optional<Cert> certify(std::size_t i, const LiftCandidate& c) const;

  // Normal form of a polynomial in translated (u, t) coordinates.
  Poly truncated_nf(const Poly& f, unsigned order) const;
  const IdealMembership& membership() const noexcept { return oracle_; }

 private:
  const Poly& image(int factor, const Monomial& beta, unsigned order);

  const SigmaData* sigma_;
  EngineLimits limits_;
  IdealMembership oracle_;
  std::vector<Poly> sigma_tilde_;  // sigma translated to the origin, minus x0
  unsigned cached_order_ = 0;
  // (factor, beta) -> NF(u_factor * sigma~^beta), factor -1 meaning none.
  std::map<std::pair<int, Monomial>, Poly> cache_;
};

struct LiftOptions {
  unsigned max_degree = 8;
  unsigned max_order = 12;
  unsigned slack = 2;  // first order tried is degree + slack
};

struct LiftResult {
  std::vector<LocalFrac> psi;  // over the source ring, based at x0
  std::vector<CertRecord> certs;
  std::vector<unsigned> degrees;
  std::vector<unsigned> orders;
  unsigned degree_used = 0;     // maximum over coordinates
  unsigned jet_order_used = 0;  // maximum over coordinates
};

// Iterative deepening over (D, N); within a degree the order grows until the
// jet system becomes inconsistent or a candidate certifies. Throws
// LimitExceeded naming the coordinate and the largest (D, N) tried.
LiftResult solve_psi(const SigmaData& sigma, const LiftOptions& options = {},
                     const EngineLimits& limits = {});

// Monomials of degree <= d in n variables, by degree, then grevlex ascending.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d);

}  // namespace urr
