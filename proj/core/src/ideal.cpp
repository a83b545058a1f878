#include "urr/ideal.hpp"

#include <algorithm>
#include <mutex>

#include "urr/errors.hpp"
#include "urr/parse.hpp"

namespace urr {

struct Ideal::Cache {
  std::mutex mutex;
  std::vector<std::pair<OrderSpec, std::shared_ptr<const StdBasis>>> entries;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(*ring_, *g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const StdBasis& Ideal::basis(const OrderSpec& order, const EngineLimits& limits) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, b] : cache_->entries) {
    if (o == order) return *b;
  }
  auto b = std::make_shared<const StdBasis>(
      std_basis_for(ring_, gens_, order, BasisOptions{false, true, limits}));
  cache_->entries.emplace_back(order, b);
  return *b;
}

bool Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  const StdBasis& b = basis(OrderSpec::grevlex(ring_->arity()));
  return mora_weak_nf(f, b).remainder.is_zero();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product_ideal(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Poly> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

namespace {

OrderSpec elimination_order(std::size_t arity, const std::vector<std::size_t>& drop) {
  std::vector<std::size_t> first;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < arity; ++i) {
    (std::find(drop.begin(), drop.end(), i) != drop.end() ? first : rest).push_back(i);
  }
  std::vector<OrderBlock> blocks;
  if (!first.empty()) blocks.push_back({first, BlockKind::DegRevLexGlobal});
  if (!rest.empty()) blocks.push_back({rest, BlockKind::DegRevLexGlobal});
  return OrderSpec(arity, std::move(blocks));
}

bool involves_any(const Poly& f, const std::vector<std::size_t>& vars) {
  for (const auto& t : f.terms()) {
    for (auto v : vars) {
      if (t.mono.exp[v] != 0) return true;
    }
  }
  return false;
}

// Ring with `count` fresh auxiliary variables appended after the user
// variables; the auxiliary block is ordered first.
struct AuxRing {
  RingPtr ring;
  std::vector<std::size_t> aux;  // indices of the auxiliary variables
  OrderSpec order;
};

AuxRing with_aux(const RingPtr& base, std::string_view stem, std::size_t count) {
  std::string prefix(1, kAuxSigil);
  prefix += stem;
  RingPtr ring = extend_ring(base, fresh_names(*base, prefix, count));
  std::vector<std::size_t> aux;
  for (std::size_t i = 0; i < count; ++i) aux.push_back(base->arity() + i);
  auto order = elimination_order(ring->arity(), aux);
  return AuxRing{std::move(ring), std::move(aux), std::move(order)};
}

std::vector<Poly> drop_aux(const StdBasis& basis, const AuxRing& ext, const RingPtr& base) {
  std::vector<Poly> out;
  for (const auto& g : basis.generators()) {
    if (involves_any(g, ext.aux)) continue;
    out.push_back(project(g, base));
  }
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop,
                const EngineLimits& limits) {
  const auto& ring = ideal.ring();
  for (auto v : drop) {
    if (v >= ring->arity()) fail(ErrorKind::ArityMismatch, "eliminated variable out of range");
  }
  if (ideal.is_zero()) return ideal;
  const StdBasis& b = ideal.basis(elimination_order(ring->arity(), drop), limits);
  std::vector<Poly> kept;
  for (const auto& g : b.generators()) {
    if (!involves_any(g, drop)) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b, const EngineLimits& limits) {
  require_same_ring(*a.ring(), *b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), {});
  AuxRing ext = with_aux(a.ring(), "s", 1);
  Poly s = Poly::variable(ext.ring, ext.aux[0]);
  Poly one_minus_s = Poly::constant(ext.ring, 1) - s;
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) gens.push_back(s * embed(f, ext.ring));
  for (const auto& g : b.gens()) gens.push_back(one_minus_s * embed(g, ext.ring));
  StdBasis basis = std_basis_for(ext.ring, gens, ext.order, BasisOptions{false, true, limits});
  return Ideal(a.ring(), drop_aux(basis, ext, a.ring()));
}

Ideal saturate(const Ideal& ideal, const Poly& f, const EngineLimits& limits) {
  require_same_ring(*ideal.ring(), *f.ring());
  if (f.is_zero()) fail(ErrorKind::PreconditionViolated, "saturation by the zero polynomial");
  AuxRing ext = with_aux(ideal.ring(), "z", 1);
  Poly z = Poly::variable(ext.ring, ext.aux[0]);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(embed(g, ext.ring));
  gens.push_back(Poly::constant(ext.ring, 1) - z * embed(f, ext.ring));
  StdBasis basis = std_basis_for(ext.ring, gens, ext.order, BasisOptions{false, true, limits});
  return Ideal(ideal.ring(), drop_aux(basis, ext, ideal.ring()));
}

std::optional<CertRecord> radical_member(const Poly& f, const Ideal& ideal,
                                         const EngineLimits& limits) {
  require_same_ring(*ideal.ring(), *f.ring());
  AuxRing ext = with_aux(ideal.ring(), "z", 1);
  Poly z = Poly::variable(ext.ring, ext.aux[0]);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(embed(g, ext.ring));
  gens.push_back(Poly::constant(ext.ring, 1) - z * embed(f, ext.ring));
  Membership m = member(Poly::constant(ext.ring, 1), gens, ext.order, std::nullopt, limits);
  if (!m.in) return std::nullopt;
  return CertRecord{"radical membership of " + to_string(f), std::move(gens),
                    std::move(*m.cert)};
}

std::size_t krull_dim(const Ideal& ideal, const EngineLimits& limits) {
  const std::size_t n = ideal.ring()->arity();
  if (ideal.is_zero()) return n;
  const StdBasis& b = ideal.basis(OrderSpec::grevlex(n), limits);
  if (b.is_unit_ideal()) fail(ErrorKind::DimOfUnitIdeal, "dimension of the unit ideal");
  // A set S is independent when no leading monomial lives in K[S].
  if (n > 20) fail(ErrorKind::LimitExceeded, "dimension search limited to 20 variables");
  auto independent = [&](std::uint32_t mask) {
    for (const auto& m : b.leading_monomials()) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) {
        if (m.exp[i] != 0 && !(mask & (std::uint32_t{1} << i))) inside = false;
      }
      if (inside) return false;
    }
    return true;
  };
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size > best && independent(mask)) best = size;
  }
  return best;
}

bool finite_over(const Ideal& ideal, const std::vector<std::size_t>& base,
                 const EngineLimits& limits) {
  const std::size_t n = ideal.ring()->arity();
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(base.begin(), base.end(), i) == base.end()) others.push_back(i);
  }
  if (others.empty()) return true;
  if (ideal.is_zero()) return false;
  const StdBasis& b = ideal.basis(elimination_order(n, others), limits);
  if (b.is_unit_ideal()) return true;
  for (auto v : others) {
    bool found = std::any_of(b.leading_monomials().begin(), b.leading_monomials().end(),
                             [&](const Monomial& m) {
                               if (m.exp[v] == 0) return false;
                               for (std::size_t i = 0; i < n; ++i) {
                                 if (i != v && m.exp[i] != 0) return false;
                               }
                               return true;
                             });
    if (!found) return false;
  }
  return true;
}

}  // namespace urr
