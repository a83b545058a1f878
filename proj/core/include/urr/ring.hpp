#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace urr {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr unsigned kDefaultDegreeCap = 64;

// Exponent vector. Slots past the ring arity are always zero, so the default
// comparison is lexicographic on the first `arity` entries.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept;
  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;

class RingCtx;
using RingPtr = std::shared_ptr<const RingCtx>;

// Ordered, duplicate-free list of variable names plus the total degree cap
// applied to every product formed in the ring.
class RingCtx {
 public:
  static RingPtr make(std::vector<std::string> names,
                      unsigned degree_cap = kDefaultDegreeCap);

  std::size_t arity() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  unsigned degree_cap() const noexcept { return degree_cap_; }

  bool same_as(const RingCtx& other) const noexcept {
    return this == &other || names_ == other.names_;
  }

 private:
  RingCtx(std::vector<std::string> names, unsigned degree_cap)
      : names_(std::move(names)), degree_cap_(degree_cap) {}

  std::vector<std::string> names_;
  unsigned degree_cap_;
};

// New ring: `base` variables followed by `extra`, same degree cap.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);

// Names `<prefix><1..count>` that do not collide with `ring`.
std::vector<std::string> fresh_names(const RingCtx& ring, std::string_view prefix,
                                     std::size_t count);

void require_same_ring(const RingCtx& a, const RingCtx& b);

}  // namespace urr
