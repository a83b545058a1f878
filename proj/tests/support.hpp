#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "urr/cert.hpp"
#include "urr/errors.hpp"
#include "urr/matrix.hpp"
#include "urr/parse.hpp"
#include "urr/poly.hpp"

namespace urr::test {

inline RingPtr ring(std::vector<std::string> names) { return RingCtx::make(std::move(names)); }

inline Poly P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

inline std::vector<Poly> Ps(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

inline Point pt(std::initializer_list<long> xs) {
  Point out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Exponent vectors of total degree <= d in n variables.
inline std::vector<Monomial> all_monomials(std::size_t n, unsigned d) {
  std::vector<Monomial> out{Monomial{}};
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      for (unsigned e = 0; m.degree() + e <= d; ++e) {
        Monomial k = m;
        k.exp[v] = static_cast<std::uint16_t>(e);
        next.push_back(k);
      }
    }
    out = std::move(next);
  }
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat coefficient(long bound) {
    long c = 0;
    while (c == 0) c = integer(-bound, bound);
    if (integer(0, 3) != 0) return Rat(c);
    Rat q(c, integer(1, 3));
    q.canonicalize();  // mpq_class(num, den) does not reduce
    return q;
  }

  // Random polynomial of total degree <= d with up to `terms` terms.
  Poly poly(const RingPtr& r, unsigned d, std::size_t terms, long bound = 5) {
    const auto monos = all_monomials(r->arity(), d);
    Poly out(r);
    for (std::size_t k = 0; k < terms; ++k) {
      const auto& m = monos[static_cast<std::size_t>(integer(0, static_cast<long>(monos.size()) - 1))];
      out += Poly::monomial(r, m, coefficient(bound));
    }
    return out;
  }

  Poly nonzero_poly(const RingPtr& r, unsigned d, std::size_t terms, long bound = 5) {
    Poly out(r);
    while (out.is_zero() || out.is_constant()) out = poly(r, d, terms, bound);
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Unknown polynomials c_1..c_k of degree <= d_i, as columns of a linear
// system whose rows are the monomials of degree <= bound.
struct Combination {
  std::vector<std::vector<Monomial>> monos;  // per unknown polynomial
  Matrix system;
  std::vector<Monomial> rows;
};

inline std::size_t row_of(const std::vector<Monomial>& rows, const Monomial& m) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] == m) return r;
  }
  return rows.size();
}

// Columns: for each (factor, monomial) the coefficient vector of
// monomial * factor.
inline Combination combination(const std::vector<Poly>& factors, const RingPtr& r,
                               unsigned bound) {
  Combination c;
  c.rows = all_monomials(r->arity(), bound);
  std::size_t cols = 0;
  for (const auto& f : factors) {
    const int room = static_cast<int>(bound) - f.total_degree();
    c.monos.push_back(room < 0 ? std::vector<Monomial>{}
                               : all_monomials(r->arity(), static_cast<unsigned>(room)));
    cols += c.monos.back().size();
  }
  c.system = Matrix(c.rows.size(), cols);
  std::size_t col = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& m : c.monos[i]) {
      for (const auto& t : factors[i].terms()) {
        c.system(row_of(c.rows, t.mono * m), col) = t.coef;
      }
      ++col;
    }
  }
  return c;
}

// f = sum c_i g_i with deg(c_i g_i) <= bound, found by linear algebra alone.
inline bool oracle_global_member(const Poly& f, const std::vector<Poly>& gens, unsigned bound) {
  if (f.is_zero()) return true;
  if (f.total_degree() > static_cast<int>(bound)) return false;
  const Combination c = combination(gens, f.ring(), bound);
  std::vector<Rat> rhs(c.rows.size(), Rat(0));
  for (const auto& t : f.terms()) rhs[row_of(c.rows, t.mono)] = t.coef;
  return solve_affine(c.system, rhs).has_value();
}

// u * f = sum c_i g_i with u(0) = 1, all products of degree <= bound. Finds
// membership localized at the origin whenever a witness of that size exists.
inline bool oracle_local_member(const Poly& f, const std::vector<Poly>& gens, unsigned bound) {
  if (f.is_zero()) return true;
  const RingPtr& r = f.ring();
  // Unknowns: u - 1 (non-constant monomials) times -f, then the c_i.
  std::vector<Poly> factors{-f};
  factors.insert(factors.end(), gens.begin(), gens.end());
  Combination c = combination(factors, r, bound);
  // Drop the column of the constant monomial of u, which is fixed to 1.
  const std::size_t u_cols = c.monos[0].size();
  if (u_cols == 0) return false;
  Matrix m(c.system.rows(), c.system.cols() - 1);
  for (std::size_t row = 0; row < m.rows(); ++row) {
    std::size_t out = 0;
    for (std::size_t col = 0; col < c.system.cols(); ++col) {
      if (col < u_cols && c.monos[0][col].is_one()) continue;
      m(row, out++) = c.system(row, col);
    }
  }
  std::vector<Rat> rhs(c.rows.size(), Rat(0));
  for (const auto& t : f.terms()) {
    const std::size_t row = row_of(c.rows, t.mono);
    if (row == c.rows.size()) return false;
    rhs[row] = t.coef;
  }
  return solve_affine(m, rhs).has_value();
}

// Shifts one coefficient of one cofactor (of the target when there is none).
inline Cert perturbed(Cert c, std::uint64_t salt) {
  if (c.cofactors.empty()) {
    c.target += Poly::constant(c.target.ring(), Rat(1 + static_cast<long>(salt % 5)));
    return c;
  }
  auto& cf = c.cofactors[salt % c.cofactors.size()].poly;
  if (cf.is_zero()) {
    cf = Poly::constant(cf.ring(), 1);
    return c;
  }
  const auto& terms = cf.terms();
  const Term& t = terms[(salt / 7) % terms.size()];
  cf += Poly::monomial(cf.ring(), t.mono, Rat(1 + static_cast<long>(salt % 5)));
  return c;
}

}  // namespace urr::test
