#include "urr/lift.hpp"

#include <algorithm>

#include "urr/errors.hpp"

namespace urr {

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  const auto order = OrderSpec::grevlex(n);
  for (unsigned deg = 0; deg <= d; ++deg) {
    std::vector<Monomial> layer;
    Monomial m;
    // Enumerate compositions of deg into n parts.
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
      if (var + 1 == n) {
        m.exp[var] = static_cast<std::uint16_t>(left);
        layer.push_back(m);
        m.exp[var] = 0;
        return;
      }
      for (unsigned e = 0; e <= left; ++e) {
        m.exp[var] = static_cast<std::uint16_t>(e);
        self(self, var + 1, left - e);
      }
      m.exp[var] = 0;
    };
    if (n == 0) {
      if (deg == 0) layer.push_back(m);
    } else {
      rec(rec, 0, deg);
    }
    std::sort(layer.begin(), layer.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

LiftCandidate JetSpace::assemble(const std::vector<Rat>& x) const {
  Poly a(source_);
  Poly b = Poly::constant(source_, 1);
  for (std::size_t k = 0; k < a_monos_.size(); ++k) {
    if (x[k] != 0) a += Poly::monomial(source_, a_monos_[k], x[k]);
  }
  for (std::size_t k = 0; k < b_monos_.size(); ++k) {
    const Rat& c = x[a_monos_.size() + k];
    if (c != 0) b += Poly::monomial(source_, b_monos_[k], c);
  }
  const Point back = negated(x0_);
  return LiftCandidate{translate(a, back), translate(b, back)};
}

std::vector<LiftCandidate> JetSpace::candidates() const {
  std::vector<LiftCandidate> out;
  if (!solution_) return out;
  out.push_back(assemble(solution_->particular));
  for (const auto& dir : solution_->directions) {
    std::vector<Rat> x = solution_->particular;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += dir[k];
    out.push_back(assemble(x));
  }
  return out;
}

bool JetSpace::contains(const LiftCandidate& c) const {
  Poly a = translate(c.a, x0_);
  Poly b = translate(c.b, x0_);
  if (b.constant_term() != 1) return false;
  std::vector<Rat> x(a_monos_.size() + b_monos_.size(), Rat(0));
  for (const auto& t : a.terms()) {
    auto it = std::find(a_monos_.begin(), a_monos_.end(), t.mono);
    if (it == a_monos_.end()) return false;
    x[static_cast<std::size_t>(it - a_monos_.begin())] = t.coef;
  }
  for (const auto& t : b.terms()) {
    if (t.mono.is_one()) continue;
    auto it = std::find(b_monos_.begin(), b_monos_.end(), t.mono);
    if (it == b_monos_.end()) return false;
    x[a_monos_.size() + static_cast<std::size_t>(it - b_monos_.begin())] = t.coef;
  }
  return system_ * x == rhs_;
}

// ---------------------------------------------------------------------------

JetSolver::JetSolver(const SigmaData& sigma, const EngineLimits& limits, unsigned order_hint)
    : sigma_(&sigma),
      limits_(limits),
      oracle_(sigma.ring(), sigma.h.gens(), OrderSpec::local(sigma.ring()->arity()), sigma.center,
              limits),
      cached_order_(order_hint) {
  const auto& x0 = sigma.frame.translation;
  for (std::size_t j = 0; j < sigma.sigma.size(); ++j) {
    sigma_tilde_.push_back(translate(sigma.sigma[j], sigma.center) -
                           Poly::constant(sigma.ring(), x0[j]));
  }
}

Poly JetSolver::truncated_nf(const Poly& f, unsigned order) const {
  const StdBasis& basis = oracle_.basis();
  const OrderSpec& ord = basis.order();
  const RingPtr& ring = sigma_->ring();
  Poly work = f.truncated(order);
  Poly out(ring);
  std::size_t steps = 0;
  while (!work.is_zero()) {
    if (++steps > limits_.max_reduction_steps) {
      fail(ErrorKind::LimitExceeded, "truncated normal form exceeded the reduction step limit");
    }
    const Term lt = work.leading(ord);
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Monomial& lm = basis.leading_monomials()[k];
      if (!lm.divides(lt.mono)) continue;
      const Poly& g = basis.generators()[k];
      Rat c = -lt.coef / g.leading(ord).coef;
      work.add_scaled(c, lt.mono / lm, g);
      work = work.truncated(order);
      reduced = true;
      break;
    }
    if (!reduced) {
      Poly t = Poly::monomial(ring, lt.mono, lt.coef);
      out += t;
      work -= t;
    }
  }
  return out;
}

const Poly& JetSolver::image(int factor, const Monomial& beta, unsigned order) {
  if (order > cached_order_) {
    cache_.clear();
    cached_order_ = order;
  }
  auto key = std::make_pair(factor, beta);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const RingPtr& ring = sigma_->ring();
  Poly f = Poly::constant(ring, 1);
  if (factor >= 0) f = Poly::variable(ring, static_cast<std::size_t>(factor));
  for (std::size_t j = 0; j < sigma_tilde_.size(); ++j) {
    for (unsigned e = 0; e < beta.exp[j]; ++e) f = (f * sigma_tilde_[j]).truncated(order);
  }
  return cache_.emplace(key, truncated_nf(f, order)).first->second;
}

JetSpace JetSolver::solve(std::size_t i, unsigned degree, unsigned order) {
  const std::size_t n = sigma_->sigma.size();
  if (i >= n) fail(ErrorKind::ArityMismatch, "coordinate index out of range");
  if (degree < 1 || order < degree + 1) {
    fail(ErrorKind::PreconditionViolated, "jet system needs D >= 1 and N >= D + 1");
  }
  const unsigned work_order = std::max(order, cached_order_);
  const Rat& x0i = sigma_->frame.translation[i];
  const auto trunc = [&](const Poly& p) { return p.truncated(order); };

  JetSpace space;
  space.source_ = sigma_->source_ring();
  space.x0_ = sigma_->frame.translation;
  space.degree_ = degree;
  space.order_ = order;
  space.a_monos_ = monomials_up_to(n, degree);
  space.b_monos_.assign(space.a_monos_.begin() + 1, space.a_monos_.end());

  const int ui = static_cast<int>(i);
  std::vector<Poly> columns;
  for (const auto& beta : space.a_monos_) columns.push_back(-trunc(image(-1, beta, work_order)));
  for (const auto& beta : space.b_monos_) {
    Poly col = trunc(image(ui, beta, work_order));
    if (x0i != 0) col += x0i * trunc(image(-1, beta, work_order));
    columns.push_back(std::move(col));
  }
  Monomial one;
  Poly rhs = -trunc(image(ui, one, work_order));
  if (x0i != 0) rhs -= x0i * trunc(image(-1, one, work_order));

  std::map<Monomial, std::size_t> rows;
  for (const auto& c : columns)
    for (const auto& t : c.terms()) rows.emplace(t.mono, 0);
  for (const auto& t : rhs.terms()) rows.emplace(t.mono, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;

  space.system_ = Matrix(rows.size(), columns.size());
  space.rhs_.assign(rows.size(), Rat(0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& t : columns[c].terms()) space.system_(rows.at(t.mono), c) = t.coef;
  }
  for (const auto& t : rhs.terms()) space.rhs_[rows.at(t.mono)] = t.coef;
  space.solution_ = solve_affine(space.system_, space.rhs_);
  return space;
}

std::optional<Cert> JetSolver::certify(std::size_t i, const LiftCandidate& c) const {
  if (c.b.evaluate(sigma_->frame.translation) != 1) {
    fail(ErrorKind::PreconditionViolated, "lift denominator must be 1 at the base point");
  }
  Poly target = sigma_->pi(i) * c.b.compose(sigma_->sigma) - c.a.compose(sigma_->sigma);
  Membership m = oracle_.test(target);
  if (!m.in) return std::nullopt;
  return std::move(*m.cert);
}

// ---------------------------------------------------------------------------

LiftResult solve_psi(const SigmaData& sigma, const LiftOptions& options,
                     const EngineLimits& limits) {
  JetSolver solver(sigma, limits, options.max_order);
  const std::size_t n = sigma.sigma.size();
  LiftResult out;
  for (std::size_t i = 0; i < n; ++i) {
    bool done = false;
    unsigned last_d = 0;
    unsigned last_n = 0;
    for (unsigned d = 1; d <= options.max_degree && !done; ++d) {
      const unsigned first = std::max(d + 1, std::min(d + options.slack, options.max_order));
      for (unsigned order = first; order <= options.max_order && !done; ++order) {
        last_d = d;
        last_n = order;
        JetSpace space = solver.solve(i, d, order);
        if (!space.consistent()) break;
        for (const auto& cand : space.candidates()) {
          auto cert = solver.certify(i, cand);
          if (!cert) continue;
          out.psi.push_back(LocalFrac::make(cand.a, cand.b, sigma.frame.translation));
          out.certs.push_back(CertRecord{"lift of coordinate " + std::to_string(i + 1),
                                         sigma.h.gens(), std::move(*cert)});
          out.degrees.push_back(d);
          out.orders.push_back(order);
          out.degree_used = std::max(out.degree_used, d);
          out.jet_order_used = std::max(out.jet_order_used, order);
          done = true;
          break;
        }
      }
    }
    if (!done) {
      fail(ErrorKind::LimitExceeded, "no certified lift for coordinate " + std::to_string(i + 1) +
                                         " up to degree " + std::to_string(last_d) +
                                         " and jet order " + std::to_string(last_n));
    }
  }
  return out;
}

}  // namespace urr
