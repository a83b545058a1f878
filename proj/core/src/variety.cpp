#include "urr/variety.hpp"

#include "urr/errors.hpp"
#include "urr/parse.hpp"

namespace urr {

VarietyPresentation VarietyPresentation::make(const RingPtr& ring, std::vector<Poly> gens,
                                              std::size_t dim, bool assume_prime,
                                              const EngineLimits& limits) {
  Ideal ideal(ring, std::move(gens));
  const std::size_t actual = krull_dim(ideal, limits);
  if (actual != dim) {
    fail(ErrorKind::PreconditionViolated, "claimed dimension " + std::to_string(dim) +
                                              " but the ideal has dimension " +
                                              std::to_string(actual));
  }
  return VarietyPresentation(std::move(ideal), dim, assume_prime);
}

VarietyPresentation VarietyPresentation::affine(const RingPtr& ring) {
  return VarietyPresentation(Ideal(ring, {}), ring->arity(), true);
}

bool VarietyPresentation::contains(const Point& p) const {
  if (p.size() != ambient_dim()) fail(ErrorKind::ArityMismatch, "point has wrong arity");
  for (const auto& g : gens()) {
    if (g.evaluate(p) != 0) return false;
  }
  return true;
}

LocalFrac LocalFrac::make(Poly num, Poly den, Point point) {
  require_same_ring(*num.ring(), *den.ring());
  if (den.evaluate(point) == 0) {
    fail(ErrorKind::PreconditionViolated, "denominator vanishes at the base point");
  }
  return LocalFrac{std::move(num), std::move(den), std::move(point)};
}

Rat LocalFrac::value() const { return num.evaluate(point) / den.evaluate(point); }

void require_defined_on(const RationalMap& map, const VarietyPresentation& x) {
  for (std::size_t i = 0; i < map.coords.size(); ++i) {
    const Poly& q = map.coords[i].den;
    require_same_ring(*q.ring(), *x.ring());
    if (x.ideal().contains(q)) {
      fail(ErrorKind::PreconditionViolated,
           "denominator of coordinate " + std::to_string(i + 1) + " vanishes on X");
    }
  }
}

Matrix jacobian_at(const std::vector<Poly>& gens, const Point& p) {
  const std::size_t n = p.size();
  Matrix jac(gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) jac(r, c) = gens[r].derivative(c).evaluate(p);
  }
  return jac;
}

namespace {

void require_on(const VarietyPresentation& x, const Point& p) {
  if (!x.contains(p)) fail(ErrorKind::PointNotOnVariety, "point is not on the variety");
}

}  // namespace

std::size_t jacobian_rank_at(const VarietyPresentation& x, const Point& p) {
  require_on(x, p);
  if (x.gens().empty()) return 0;
  return jacobian_at(x.gens(), p).rank();
}

bool smooth_at(const VarietyPresentation& x, const Point& p) {
  return jacobian_rank_at(x, p) == x.ambient_dim() - x.dim();
}

std::vector<Point> tangent_space(const VarietyPresentation& x, const Point& p) {
  require_on(x, p);
  if (x.gens().empty()) {
    std::vector<Point> basis;
    for (std::size_t i = 0; i < x.ambient_dim(); ++i) {
      Point e = zero_point(x.ambient_dim());
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return jacobian_at(x.gens(), p).kernel();
}

Regularity regular_on_X_at(const Poly& p_num, const Poly& q_den, const VarietyPresentation& x,
                           const Point& p, const EngineLimits& limits) {
  require_on(x, p);
  require_same_ring(*p_num.ring(), *x.ring());
  require_same_ring(*q_den.ring(), *x.ring());
  std::vector<Poly> gens{q_den};
  gens.insert(gens.end(), x.gens().begin(), x.gens().end());
  Regularity out;
  try {
    IdealMembership oracle(x.ring(), gens, OrderSpec::local(x.ambient_dim()), p, limits);
    WeakNormalForm nf = oracle.normal_form(p_num);
    if (!nf.remainder.is_zero()) {
      out.verdict = Verdict::NotRegular;
      out.reason = "numerator is not in (Q) + I(X) at the point";
      return out;
    }
    Cert cert{p_num, nf.unit, {}, p};
    for (std::size_t j = 0; j < nf.cofactors.size(); ++j) {
      if (!nf.cofactors[j].is_zero()) cert.cofactors.push_back(Cofactor{j, nf.cofactors[j]});
    }
    out.verdict = Verdict::Regular;
    out.rep = LocalFrac::make(nf.cofactors[0], nf.unit, p);
    out.cert = CertRecord{"regularity of (" + to_string(p_num) + ")/(" + to_string(q_den) + ")",
                          std::move(gens), std::move(cert)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::LimitExceeded) throw;
    out.verdict = Verdict::Undetermined;
    out.reason = e.what();
  }
  return out;
}

MapEquality maps_equal_on_X(const std::vector<Fraction>& f, const std::vector<Fraction>& g,
                            const VarietyPresentation& x, const EngineLimits& limits) {
  if (f.size() != g.size()) fail(ErrorKind::ArityMismatch, "maps have different target arity");
  MapEquality out;
  const auto order = OrderSpec::grevlex(x.ambient_dim());
  std::optional<IdealMembership> oracle;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Poly cross = f[i].num * g[i].den - g[i].num * f[i].den;
    Cert cert = Cert::trivial(cross);
    if (!cross.is_zero()) {
      if (!oracle) oracle.emplace(x.ring(), x.gens(), order, std::nullopt, limits);
      Membership m = oracle->test(cross);
      if (!m.in) {
        out.first_difference = i;
        out.certs.clear();
        return out;
      }
      cert = std::move(*m.cert);
    }
    out.certs.push_back(CertRecord{"coordinate " + std::to_string(i + 1) + " agrees on X",
                                   x.gens(), std::move(cert)});
  }
  out.equal = true;
  return out;
}

}  // namespace urr
