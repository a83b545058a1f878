#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "urr/variety.hpp"

namespace urr {

// P(v + w) = P(v) + sum_i w_i * parts[i](v, w) over the ring (v, w), where v
// are P's variables and w fresh ones.
struct SplitDecomposition {
  RingPtr ring;
  Poly base;
  std::vector<Poly> parts;
};

// Telescoping in variable order: parts[i] = (P(v + w^(i)) - P(v + w^(i-1))) / w_i
// with w^(i) = (w_1..w_i, 0..0).
SplitDecomposition split_difference(const Poly& p);

// Exact quotient f / x_var; throws Internal if some term lacks the variable.
Poly divide_by_variable(const Poly& f, std::size_t var);

// Fractions rewritten over l = product of their distinct denominators:
// images[j] = scaled[j] / l.
struct CommonDenominator {
  Poly l;
  std::vector<Poly> scaled;

  static CommonDenominator of(std::span<const Fraction> images);
  // l^d * S(images) for d >= deg S.
  Poly cleared(const Poly& s, unsigned d) const;
};

// S(images) as a fraction with denominator l^deg(S).
Fraction compose_fraction(const Poly& s, std::span<const Fraction> images);
// (P / Q)(images) with the common power of l cancelled.
Fraction compose_ratio(const Poly& p, const Poly& q, std::span<const Fraction> images);

// phi_i - pi_i = (Q o pi) * e_i on X x W, e_i vanishing at the base point.
// The record certifies (phi.num - pi * phi.den) * e.den - (Q o pi) * e.num * phi.den
// lies in the ideal of X x W.
struct Premise {
  Fraction e;
  CertRecord cert;
};

struct ComposedGerm {
  LocalFrac value;  // denominator 1 at the base point
  // value * (Q o phi) and P o phi agree on X x W (cross products cleared).
  CertRecord cert;
};

// The closed form
//   [P(pi)/Q(pi) + sum_i e_i P_i(pi, (Q o pi) e)] / [1 + sum_i e_i Q_i(pi, (Q o pi) e)]
// with P_i, Q_i from split_difference and rep the germ of P(pi)/Q(pi).
// Throws PremiseCertMissing when a premise is absent or fails to replay.
ComposedGerm compose_regular(const Poly& p, const Poly& q, const std::vector<Poly>& pi,
                             const std::vector<Fraction>& phi,
                             const std::vector<Premise>& premises, const LocalFrac& rep,
                             const VarietyPresentation& xw, const EngineLimits& limits = {});

struct Descent {
  LocalFrac value;  // a / u with u(p) != 0
  CertRecord cert;  // u * P = a * Q, generators [Q], localized at p
};

// Local division of P by Q at p. Throws DescentFailed when Q does not divide
// P in the local ring.
Descent descend_division(const Poly& p_num, const Poly& q_den, const Point& p,
                         const EngineLimits& limits = {});

}  // namespace urr
