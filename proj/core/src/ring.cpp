#include "urr/ring.hpp"

#include <algorithm>
#include <set>

#include "urr/errors.hpp"

namespace urr {

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  }
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  }
  return true;
}

RingPtr RingCtx::make(std::vector<std::string> names, unsigned degree_cap) {
  if (names.size() > kMaxVars) {
    fail(ErrorKind::LimitExceeded,
         "ring arity " + std::to_string(names.size()) + " exceeds " +
             std::to_string(kMaxVars));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorKind::PreconditionViolated, "empty variable name");
    if (!seen.insert(n).second) {
      fail(ErrorKind::PreconditionViolated, "duplicate variable name '" + n + "'");
    }
  }
  return RingPtr(new RingCtx(std::move(names), degree_cap));
}

std::optional<std::size_t> RingCtx::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  auto names = base->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return RingCtx::make(std::move(names), base->degree_cap());
}

std::vector<std::string> fresh_names(const RingCtx& ring, std::string_view prefix,
                                     std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    std::string candidate = std::string(prefix) + std::to_string(k);
    if (!ring.index_of(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

void require_same_ring(const RingCtx& a, const RingCtx& b) {
  if (!a.same_as(b)) fail(ErrorKind::ArityMismatch, "polynomials live in different rings");
}

}  // namespace urr
