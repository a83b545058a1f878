#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "urr/matrix.hpp"
#include "urr/order.hpp"
#include "urr/rational.hpp"
#include "urr/ring.hpp"

namespace urr {

struct Term {
  Monomial mono;
  Rat coef;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted by descending
// lexicographic exponent vector with no zero coefficients, which makes the
// representation canonical; order-dependent views (leading term, printing)
// take an OrderSpec explicitly.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, const Rat& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, const Rat& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rat constant_term() const;
  Rat coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  int total_degree() const noexcept;

  // Largest term under `order`. Requires !is_zero().
  const Term& leading(const OrderSpec& order) const;
  // total_degree() minus the degree of the leading monomial.
  int ecart(const OrderSpec& order) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;
  // this += c * m * g in one merge pass.
  void add_scaled(const Rat& c, const Monomial& m, const Poly& g);
  Poly times_term(const Rat& c, const Monomial& m) const;

  // Terms of total degree < bound.
  Poly truncated(unsigned bound) const;
  Poly derivative(std::size_t var) const;
  Rat evaluate(const Point& p) const;
  // Substitutes variable i by images[i]; images share a common target ring.
  Poly compose(std::span<const Poly> images) const;
  // Moves the polynomial into `target`, variable i going to index_map[i].
  Poly remap(const RingPtr& target, std::span<const std::size_t> index_map) const;

 private:
  void check_degree(const Monomial& m) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// g(v) = f(v + p).
Poly translate(const Poly& f, const Point& p);
// f composed with x -> A x, i.e. x_i is replaced by sum_j A(i,j) x_j.
// Throws SingularMatrix when A is not invertible.
Poly linear_change(const Poly& f, const Matrix& a);

std::vector<Poly> variables(const RingPtr& ring);
Point negated(const Point& p);

// Embeds f into a ring whose leading variables coincide with f's ring.
Poly embed(const Poly& f, const RingPtr& target);
// Inverse of embed for polynomials not involving the trailing variables.
Poly project(const Poly& f, const RingPtr& target);
bool involves_only_first(const Poly& f, std::size_t count);

}  // namespace urr
