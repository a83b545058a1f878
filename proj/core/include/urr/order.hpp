#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "urr/ring.hpp"

namespace urr {

enum class BlockKind {
  DegRevLexGlobal,  // dp
  LexGlobal,        // lp
  DegRevLexLocal,   // ds: lower degree is larger, ties broken by revlex
  LexLocal,         // ls
};

bool is_local(BlockKind kind) noexcept;
std::string_view block_code(BlockKind kind) noexcept;

struct OrderBlock {
  std::vector<std::size_t> vars;
  BlockKind kind;

  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

// Block monomial ordering. Blocks partition the variables and are compared
// in sequence; the first block on which two monomials differ decides.
class OrderSpec {
 public:
  OrderSpec(std::size_t arity, std::vector<OrderBlock> blocks);

  static OrderSpec grevlex(std::size_t arity);
  static OrderSpec lex(std::size_t arity);
  static OrderSpec local(std::size_t arity);
  static OrderSpec local_lex(std::size_t arity);
  // Variables [0, split) form the first block, [split, arity) the second.
  static OrderSpec two_blocks(std::size_t arity, std::size_t split, BlockKind first,
                              BlockKind second);

  // Parses "dp", "lp", "ds", "ls" (single block) or a block list such as
  // "lp(2),dp(1)" with block sizes summing to the arity.
  static OrderSpec parse(std::string_view text, std::size_t arity);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) < 0;
  }

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<OrderBlock>& blocks() const noexcept { return blocks_; }
  bool is_global() const noexcept;
  bool has_local() const noexcept { return !is_global(); }
  std::string describe() const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  std::size_t arity_;
  std::vector<OrderBlock> blocks_;
};

}  // namespace urr
