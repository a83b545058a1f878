#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "urr/cert.hpp"
#include "urr/groebner.hpp"

namespace urr {

// Generator list with a per-ordering cache of standard bases. Copies share
// the cache; access to it is serialized internally.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Poly>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  // Cached; cofactors are not tracked.
  const StdBasis& basis(const OrderSpec& order, const EngineLimits& limits = {}) const;
  bool contains(const Poly& f) const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
// Generated by pairwise products of generators.
Ideal product_ideal(const Ideal& a, const Ideal& b);

// I ∩ K[remaining variables], computed with the dropped block ordered first.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop,
                const EngineLimits& limits = {});
// Eliminates s from s*I + (1-s)*J in a ring with one auxiliary variable.
Ideal intersect(const Ideal& a, const Ideal& b, const EngineLimits& limits = {});
// I : f^infinity, eliminating z from I + (1 - z f).
Ideal saturate(const Ideal& ideal, const Poly& f, const EngineLimits& limits = {});

// f vanishes on the zero set of I over the algebraic closure iff
// 1 ∈ I + (1 - z f). The record holds the certificate for 1 over the
// extended ring's generators (the generators of I, then 1 - z f).
std::optional<CertRecord> radical_member(const Poly& f, const Ideal& ideal,
                                         const EngineLimits& limits = {});

// Largest independent variable set of the leading ideal of a degree reverse
// lexicographic basis. Throws DimOfUnitIdeal.
std::size_t krull_dim(const Ideal& ideal, const EngineLimits& limits = {});

// K[vars]/I is module-finite over K[base]: with the non-base variables in an
// elimination block, each of them must be the leading monomial's only
// variable for some basis element.
bool finite_over(const Ideal& ideal, const std::vector<std::size_t>& base,
                 const EngineLimits& limits = {});

// Reserved names for auxiliary variables start with this sigil.
inline constexpr char kAuxSigil = '@';

}  // namespace urr
