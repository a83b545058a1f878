#include "urr/groebner.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "urr/errors.hpp"

namespace urr {

namespace {

struct Elem {
  Poly poly;
  Monomial lm;
  Rat lc;
  int ecart = 0;
  std::vector<Poly> rep;  // over the source generators; empty when untracked
  unsigned sugar = 0;
  bool live = true;  // false once a later leading monomial divides lm
};

Elem make_elem(Poly p, const OrderSpec& order, std::vector<Poly> rep) {
  const Term lt = p.leading(order);
  Elem e{std::move(p), lt.mono, lt.coef, 0, std::move(rep)};
  e.ecart = e.poly.ecart(order);
  return e;
}

// An intermediate reduct kept as an extra reducer:  poly = unit * f - sum c_k b_k.
struct Extra {
  Poly poly;
  Monomial lm;
  Rat lc;
  int ecart;
  Poly unit;
  std::vector<Poly> cofactors;
};

struct NfResult {
  Poly remainder;
  Poly unit;
  std::vector<Poly> cofactors;  // over the elements passed in
};

void add_term(Poly& target, const Rat& c, const Monomial& m) {
  target += Poly::monomial(target.ring(), m, c);
}

// Full reduction for global orders. h lives in a map sorted by the order so
// one step costs O(|g| log |h|); cofactor terms are collected and merged once.
NfResult global_nf(const Poly& f, const std::vector<Elem>& basis, const OrderSpec& order,
                   bool track, const EngineLimits& limits) {
  const RingPtr& ring = f.ring();
  auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.less(b, a); };
  std::map<Monomial, Rat, decltype(cmp)> h(cmp);
  for (const auto& t : f.terms()) h.emplace(t.mono, t.coef);
  std::vector<Term> tail;
  std::vector<std::vector<Term>> cof(track ? basis.size() : 0);
  std::size_t steps = 0;
  while (!h.empty()) {
    if (++steps > limits.max_reduction_steps) {
      fail(ErrorKind::LimitExceeded, "normal form exceeded " +
                                         std::to_string(limits.max_reduction_steps) + " steps");
    }
    auto lead = h.begin();
    const Monomial lm = lead->first;
    const Rat lc = lead->second;
    h.erase(lead);
    std::ptrdiff_t best = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!basis[k].lm.divides(lm)) continue;
      if (best < 0 || basis[k].poly.size() < basis[static_cast<std::size_t>(best)].poly.size()) {
        best = static_cast<std::ptrdiff_t>(k);
      }
    }
    if (best < 0) {
      tail.push_back(Term{lm, lc});
      continue;
    }
    const Elem& g = basis[static_cast<std::size_t>(best)];
    const Monomial m = lm / g.lm;
    const Rat coef = lc / g.lc;
    for (const auto& t : g.poly.terms()) {
      if (t.mono == g.lm) continue;
      const Monomial mono = t.mono * m;
      auto [it, fresh] = h.try_emplace(mono, 0);
      it->second -= coef * t.coef;
      if (it->second == 0) h.erase(it);
    }
    if (track) cof[static_cast<std::size_t>(best)].push_back(Term{m, coef});
  }
  NfResult out{Poly(ring, std::move(tail)), Poly::constant(ring, 1), {}};
  for (auto& c : cof) out.cofactors.emplace_back(ring, std::move(c));
  return out;
}

// Mora's normal form. `full` additionally reduces every tail term, which is
// only attempted for global orders (where it terminates).
NfResult mora_nf(const Poly& f, const std::vector<Elem>& basis, const OrderSpec& order,
                 bool track, bool full, const EngineLimits& limits) {
  const RingPtr& ring = f.ring();
  const bool global = order.is_global();
  if (global && full) return global_nf(f, basis, order, track, limits);
  NfResult out{Poly(ring), Poly::constant(ring, 1), {}};
  if (track) out.cofactors.assign(basis.size(), Poly(ring));
  Poly h = f;
  std::vector<Term> tail;  // full reduction: irreducible terms, in the order found
  std::vector<Extra> extras;
  std::size_t steps = 0;

  while (!h.is_zero()) {
    if (++steps > limits.max_reduction_steps) {
      fail(ErrorKind::LimitExceeded, "normal form exceeded " +
                                         std::to_string(limits.max_reduction_steps) + " steps");
    }
    const Term lt = h.leading(order);
    int best_ecart = 0;
    std::ptrdiff_t best_basis = -1;
    std::ptrdiff_t best_extra = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!basis[k].lm.divides(lt.mono)) continue;
      if (best_basis < 0 || basis[k].ecart < best_ecart) {
        best_basis = static_cast<std::ptrdiff_t>(k);
        best_ecart = basis[k].ecart;
      }
    }
    for (std::size_t k = 0; k < extras.size(); ++k) {
      if (!extras[k].lm.divides(lt.mono)) continue;
      if ((best_basis < 0 && best_extra < 0) || extras[k].ecart < best_ecart) {
        best_basis = -1;
        best_extra = static_cast<std::ptrdiff_t>(k);
        best_ecart = extras[k].ecart;
      }
    }
    if (best_basis < 0 && best_extra < 0) {
      if (!full) break;
      tail.push_back(lt);
      h -= Poly::monomial(ring, lt.mono, lt.coef);
      continue;
    }
    if (!global) {
      int eh = h.ecart(order);
      if (best_ecart > eh) {
        extras.push_back(Extra{h, lt.mono, lt.coef, eh, out.unit, out.cofactors});
      }
    }
    if (best_basis >= 0) {
      const Elem& g = basis[static_cast<std::size_t>(best_basis)];
      Monomial m = lt.mono / g.lm;
      Rat coef = lt.coef / g.lc;
      h.add_scaled(-coef, m, g.poly);
      if (track) add_term(out.cofactors[static_cast<std::size_t>(best_basis)], coef, m);
    } else {
      // Copy: push_back above may reallocate `extras`.
      const Extra g = extras[static_cast<std::size_t>(best_extra)];
      Monomial m = lt.mono / g.lm;
      Rat coef = lt.coef / g.lc;
      h.add_scaled(-coef, m, g.poly);
      out.unit.add_scaled(-coef, m, g.unit);
      if (track) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
          out.cofactors[k].add_scaled(-coef, m, g.cofactors[k]);
        }
      }
    }
  }
  if (full) {
    out.remainder = Poly(ring, std::move(tail)) + h;
  } else {
    out.remainder = std::move(h);
  }
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned degree;  // sugar for global orders, lcm degree otherwise
};

std::vector<Poly> combine_reps(const std::vector<Poly>& coeffs, const std::vector<Elem>& elems,
                               std::size_t source_count, const RingPtr& ring) {
  std::vector<Poly> rep(source_count, Poly(ring));
  for (std::size_t k = 0; k < elems.size() && k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t j = 0; j < source_count; ++j) {
      if (!elems[k].rep[j].is_zero()) rep[j] += coeffs[k] * elems[k].rep[j];
    }
  }
  return rep;
}

void scale_elem(Elem& e, const Rat& c) {
  e.poly *= c;
  e.lc *= c;
  for (auto& r : e.rep) r *= c;
}

}  // namespace

bool StdBasis::is_unit_ideal() const noexcept {
  return std::any_of(lms_.begin(), lms_.end(), [](const Monomial& m) { return m.is_one(); });
}

Poly spoly(const Poly& f, const Poly& g, const OrderSpec& order) {
  const Term& lf = f.leading(order);
  const Term& lg = g.leading(order);
  Monomial l = lcm(lf.mono, lg.mono);
  Poly s = f.times_term(1 / lf.coef, l / lf.mono);
  s.add_scaled(-1 / lg.coef, l / lg.mono, g);
  return s;
}

StdBasis std_basis(std::span<const Poly> gens, const OrderSpec& order, const BasisOptions& options) {
  if (gens.empty()) fail(ErrorKind::PreconditionViolated, "std_basis needs at least one generator");
  return std_basis_for(gens.front().ring(), gens, order, options);
}

StdBasis std_basis_for(const RingPtr& ring, std::span<const Poly> gens, const OrderSpec& order,
                       const BasisOptions& options) {
  if (order.arity() != ring->arity()) fail(ErrorKind::ArityMismatch, "ordering arity mismatch");
  for (const auto& g : gens) require_same_ring(*ring, *g.ring());
  const bool track = options.track_cofactors;
  const bool global = order.is_global();
  const std::size_t nsrc = gens.size();

  StdBasis out(ring, order);
  out.source_.assign(gens.begin(), gens.end());

  std::vector<Elem> elems;
  std::vector<Pair> pairs;
  // Pairs already formed and either reduced or discarded, for the chain
  // criterion.
  std::vector<std::vector<bool>> done;
  auto pair_done = [&](std::size_t i, std::size_t j) {
    return i < j ? done[j][i] : done[i][j];
  };
  auto add_elem = [&](Elem e) {
    if (elems.size() >= options.limits.max_basis_size) {
      fail(ErrorKind::LimitExceeded, "standard basis exceeded " +
                                         std::to_string(options.limits.max_basis_size) +
                                         " elements");
    }
    std::size_t j = elems.size();
    e.sugar = std::max(e.sugar, static_cast<unsigned>(std::max(e.poly.total_degree(), 0)));
    for (std::size_t i = 0; i < j; ++i) {
      if (!elems[i].live) continue;
      Monomial l = lcm(elems[i].lm, e.lm);
      unsigned degree = l.degree();
      if (global) {
        degree = std::max(elems[i].sugar + (l / elems[i].lm).degree(),
                          e.sugar + (l / e.lm).degree());
      }
      pairs.push_back(Pair{i, j, l, degree});
    }
    if (global) {
      for (std::size_t i = 0; i < j; ++i) {
        if (e.lm.divides(elems[i].lm)) elems[i].live = false;
      }
    }
    elems.push_back(std::move(e));
    done.emplace_back(j, false);
  };
  // Global elements are kept monic with fully reduced tails.
  auto normalize_elem = [&](Elem& e) {
    if (global) scale_elem(e, 1 / e.lc);
  };

  for (std::size_t j = 0; j < nsrc; ++j) {
    if (gens[j].is_zero()) continue;
    std::vector<Poly> rep;
    if (track) {
      rep.assign(nsrc, Poly(ring));
      rep[j] = Poly::constant(ring, 1);
    }
    Elem e = make_elem(gens[j], order, std::move(rep));
    normalize_elem(e);
    add_elem(std::move(e));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = *best;
    pairs.erase(best);
    done[p.j][p.i] = true;
    if (global) {
      if (coprime(elems[p.i].lm, elems[p.j].lm)) continue;
      // Chain criterion: some lm_k divides the lcm and both (i, k) and
      // (j, k) have already been dealt with.
      bool chained = false;
      for (std::size_t k = 0; k < elems.size() && !chained; ++k) {
        if (k == p.i || k == p.j || !elems[k].lm.divides(p.lcm)) continue;
        chained = pair_done(p.i, k) && pair_done(p.j, k);
      }
      if (chained) continue;
    }
    if (++processed > options.limits.max_pairs) {
      fail(ErrorKind::LimitExceeded,
           "standard basis exceeded " + std::to_string(options.limits.max_pairs) + " pairs");
    }
    const Elem& a = elems[p.i];
    const Elem& b = elems[p.j];
    Monomial ma = p.lcm / a.lm;
    Monomial mb = p.lcm / b.lm;
    Rat ca = 1 / a.lc;
    Rat cb = -1 / b.lc;
    Poly s = a.poly.times_term(ca, ma);
    s.add_scaled(cb, mb, b.poly);
    if (s.is_zero()) continue;
    NfResult nf = mora_nf(s, elems, order, track, global, options.limits);
    if (nf.remainder.is_zero()) continue;
    std::vector<Poly> rep;
    if (track) {
      rep.assign(nsrc, Poly(ring));
      for (std::size_t j = 0; j < nsrc; ++j) {
        Poly sj = a.rep[j].times_term(ca, ma);
        sj.add_scaled(cb, mb, b.rep[j]);
        rep[j] = nf.unit * sj;
      }
      auto sub = combine_reps(nf.cofactors, elems, nsrc, ring);
      for (std::size_t j = 0; j < nsrc; ++j) rep[j] -= sub[j];
    }
    Elem e = make_elem(std::move(nf.remainder), order, std::move(rep));
    e.sugar = p.degree;
    normalize_elem(e);
    add_elem(std::move(e));
  }

  // Minimalize: drop elements whose leading monomial is a proper multiple of
  // another's (ties keep the lower index).
  std::vector<Elem> minimal;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < elems.size() && !redundant; ++l) {
      if (l == k || !elems[l].lm.divides(elems[k].lm)) continue;
      redundant = elems[l].lm != elems[k].lm || l < k;
    }
    if (!redundant) minimal.push_back(std::move(elems[k]));
  }
  for (auto& e : minimal) scale_elem(e, 1 / e.lc);

  if (global && options.reduce) {
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Elem> others;
      std::vector<std::size_t> index;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l == k) continue;
        others.push_back(minimal[l]);
        index.push_back(l);
      }
      Poly tail = minimal[k].poly - Poly::monomial(ring, minimal[k].lm, 1);
      NfResult nf = mora_nf(tail, others, order, track, true, options.limits);
      Elem& e = minimal[k];
      if (track) {
        auto sub = combine_reps(nf.cofactors, others, nsrc, ring);
        for (std::size_t j = 0; j < nsrc; ++j) e.rep[j] -= sub[j];
      }
      e.poly = Poly::monomial(ring, e.lm, 1) + nf.remainder;
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Elem& x, const Elem& y) { return order.less(x.lm, y.lm); });
    out.reduced_ = true;
  }

  for (auto& e : minimal) {
    out.lms_.push_back(e.lm);
    out.gens_.push_back(std::move(e.poly));
    if (track) out.reps_.push_back(std::move(e.rep));
  }
  return out;
}

WeakNormalForm mora_weak_nf(const Poly& f, const StdBasis& basis, const EngineLimits& limits) {
  require_same_ring(*f.ring(), *basis.ring());
  std::vector<Elem> elems;
  elems.reserve(basis.size());
  for (const auto& g : basis.generators()) elems.push_back(make_elem(g, basis.order(), {}));
  NfResult nf = mora_nf(f, elems, basis.order(), true, basis.order().is_global(), limits);
  return WeakNormalForm{std::move(nf.remainder), std::move(nf.unit), std::move(nf.cofactors)};
}

Cert source_cert(const Poly& f, const WeakNormalForm& nf, const StdBasis& basis,
                 std::optional<Point> point) {
  if (!basis.tracks_cofactors()) fail(ErrorKind::Internal, "basis does not track cofactors");
  if (!nf.remainder.is_zero()) fail(ErrorKind::Internal, "certificate for a nonzero remainder");
  const RingPtr& ring = f.ring();
  const std::size_t nsrc = basis.source().size();
  std::vector<Poly> coeffs(nsrc, Poly(ring));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (nf.cofactors[k].is_zero()) continue;
    for (std::size_t j = 0; j < nsrc; ++j) {
      const Poly& r = basis.representations()[k][j];
      if (!r.is_zero()) coeffs[j] += nf.cofactors[k] * r;
    }
  }
  Cert cert{f, nf.unit, {}, std::move(point)};
  for (std::size_t j = 0; j < nsrc; ++j) {
    if (!coeffs[j].is_zero()) cert.cofactors.push_back(Cofactor{j, std::move(coeffs[j])});
  }
  return cert;
}

namespace {

std::vector<Poly> translated_all(const std::vector<Poly>& gens, const std::optional<Point>& p) {
  if (!p) return gens;
  std::vector<Poly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(translate(g, *p));
  return out;
}

std::optional<Point> effective_center(const RingPtr& ring, const OrderSpec& order,
                                      std::optional<Point> center) {
  if (center) {
    if (order.is_global()) {
      fail(ErrorKind::PreconditionViolated, "localized membership needs a local or mixed order");
    }
    if (center->size() != ring->arity()) fail(ErrorKind::ArityMismatch, "center arity mismatch");
    return center;
  }
  if (order.has_local()) return zero_point(ring->arity());
  return std::nullopt;
}

}  // namespace

IdealMembership::IdealMembership(const RingPtr& ring, std::vector<Poly> gens,
                                 const OrderSpec& order, std::optional<Point> center,
                                 EngineLimits limits)
    : ring_(ring),
      gens_(std::move(gens)),
      center_(effective_center(ring, order, std::move(center))),
      limits_(limits),
      basis_(std_basis_for(ring, translated_all(gens_, center_), order,
                           BasisOptions{true, true, limits})) {}

WeakNormalForm IdealMembership::normal_form(const Poly& f) const {
  require_same_ring(*ring_, *f.ring());
  Poly g = center_ ? translate(f, *center_) : f;
  WeakNormalForm nf = mora_weak_nf(g, basis_, limits_);
  const std::size_t nsrc = gens_.size();
  std::vector<Poly> coeffs(nsrc, Poly(ring_));
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (nf.cofactors[k].is_zero()) continue;
    for (std::size_t j = 0; j < nsrc; ++j) {
      const Poly& r = basis_.representations()[k][j];
      if (!r.is_zero()) coeffs[j] += nf.cofactors[k] * r;
    }
  }
  WeakNormalForm out{std::move(nf.remainder), std::move(nf.unit), std::move(coeffs)};
  if (center_) {
    Point back = negated(*center_);
    out.remainder = translate(out.remainder, back);
    out.unit = translate(out.unit, back);
    for (auto& c : out.cofactors) c = translate(c, back);
  }
  return out;
}

Membership IdealMembership::test(const Poly& f) const {
  WeakNormalForm nf = normal_form(f);
  if (!nf.remainder.is_zero()) return Membership{false, std::nullopt};
  Cert cert{f, std::move(nf.unit), {}, center_};
  for (std::size_t j = 0; j < nf.cofactors.size(); ++j) {
    if (!nf.cofactors[j].is_zero()) cert.cofactors.push_back(Cofactor{j, std::move(nf.cofactors[j])});
  }
  return Membership{true, std::move(cert)};
}

Membership member(const Poly& f, std::span<const Poly> gens, const OrderSpec& order,
                  const std::optional<Point>& point, const EngineLimits& limits) {
  IdealMembership oracle(f.ring(), std::vector<Poly>(gens.begin(), gens.end()), order, point,
                         limits);
  return oracle.test(f);
}

}  // namespace urr
