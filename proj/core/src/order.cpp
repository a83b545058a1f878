#include "urr/order.hpp"

#include <algorithm>
#include <numeric>

#include "urr/errors.hpp"

namespace urr {

bool is_local(BlockKind kind) noexcept {
  return kind == BlockKind::DegRevLexLocal || kind == BlockKind::LexLocal;
}

std::string_view block_code(BlockKind kind) noexcept {
  switch (kind) {
    case BlockKind::DegRevLexGlobal: return "dp";
    case BlockKind::LexGlobal: return "lp";
    case BlockKind::DegRevLexLocal: return "ds";
    case BlockKind::LexLocal: return "ls";
  }
  return "dp";
}

OrderSpec::OrderSpec(std::size_t arity, std::vector<OrderBlock> blocks)
    : arity_(arity), blocks_(std::move(blocks)) {
  std::vector<int> seen(arity, 0);
  for (const auto& block : blocks_) {
    if (block.vars.empty()) fail(ErrorKind::PreconditionViolated, "empty order block");
    for (auto v : block.vars) {
      if (v >= arity) fail(ErrorKind::ArityMismatch, "order block variable out of range");
      if (seen[v]++) fail(ErrorKind::PreconditionViolated, "order blocks overlap");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    fail(ErrorKind::PreconditionViolated, "order blocks do not cover every variable");
  }
}

namespace {

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

OrderSpec single(std::size_t arity, BlockKind kind) {
  if (arity == 0) return OrderSpec(0, {});
  return OrderSpec(arity, {OrderBlock{iota(0, arity), kind}});
}

std::strong_ordering compare_block(const OrderBlock& block, const Monomial& a,
                                   const Monomial& b) noexcept {
  const auto& vars = block.vars;
  auto revlex = [&]() {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      auto ea = a.exp[*it];
      auto eb = b.exp[*it];
      if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  };
  auto degree_diff = [&]() {
    long da = 0;
    long db = 0;
    for (auto v : vars) {
      da += a.exp[v];
      db += b.exp[v];
    }
    return da <=> db;
  };
  switch (block.kind) {
    case BlockKind::DegRevLexGlobal: {
      auto d = degree_diff();
      return d != 0 ? d : revlex();
    }
    case BlockKind::DegRevLexLocal: {
      auto d = degree_diff();
      return d != 0 ? 0 <=> d : revlex();
    }
    case BlockKind::LexGlobal:
      for (auto v : vars) {
        if (a.exp[v] != b.exp[v]) return a.exp[v] <=> b.exp[v];
      }
      return std::strong_ordering::equal;
    case BlockKind::LexLocal:
      for (auto v : vars) {
        if (a.exp[v] != b.exp[v]) return b.exp[v] <=> a.exp[v];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

BlockKind kind_from_code(std::string_view code) {
  if (code == "dp") return BlockKind::DegRevLexGlobal;
  if (code == "lp") return BlockKind::LexGlobal;
  if (code == "ds") return BlockKind::DegRevLexLocal;
  if (code == "ls") return BlockKind::LexLocal;
  throw SyntaxError("unknown ordering '" + std::string(code) + "'", 1);
}

}  // namespace

OrderSpec OrderSpec::grevlex(std::size_t arity) { return single(arity, BlockKind::DegRevLexGlobal); }
OrderSpec OrderSpec::lex(std::size_t arity) { return single(arity, BlockKind::LexGlobal); }
OrderSpec OrderSpec::local(std::size_t arity) { return single(arity, BlockKind::DegRevLexLocal); }
OrderSpec OrderSpec::local_lex(std::size_t arity) { return single(arity, BlockKind::LexLocal); }

OrderSpec OrderSpec::two_blocks(std::size_t arity, std::size_t split, BlockKind first,
                                BlockKind second) {
  std::vector<OrderBlock> blocks;
  if (split > 0) blocks.push_back({iota(0, split), first});
  if (split < arity) blocks.push_back({iota(split, arity), second});
  return OrderSpec(arity, std::move(blocks));
}

OrderSpec OrderSpec::parse(std::string_view text, std::size_t arity) {
  if (text.find('(') == std::string_view::npos) {
    return single(arity, kind_from_code(text));
  }
  std::vector<OrderBlock> blocks;
  std::size_t next = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto open = text.find('(', pos);
    auto close = text.find(')', pos);
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
      throw SyntaxError("malformed block ordering", pos + 1);
    }
    auto kind = kind_from_code(text.substr(pos, open - pos));
    std::size_t size = 0;
    for (auto c : text.substr(open + 1, close - open - 1)) {
      if (c < '0' || c > '9') throw SyntaxError("malformed block size", open + 2);
      size = size * 10 + static_cast<std::size_t>(c - '0');
    }
    if (size == 0 || next + size > arity) {
      fail(ErrorKind::ArityMismatch, "block sizes do not match ring arity");
    }
    blocks.push_back({iota(next, next + size), kind});
    next += size;
    pos = close + 1;
    if (pos < text.size()) {
      if (text[pos] != ',') throw SyntaxError("expected ',' between blocks", pos + 1);
      ++pos;
    }
  }
  if (next != arity) fail(ErrorKind::ArityMismatch, "block sizes do not match ring arity");
  return OrderSpec(arity, std::move(blocks));
}

std::strong_ordering OrderSpec::compare(const Monomial& a, const Monomial& b) const noexcept {
  for (const auto& block : blocks_) {
    auto c = compare_block(block, a, b);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool OrderSpec::is_global() const noexcept {
  return std::none_of(blocks_.begin(), blocks_.end(),
                      [](const OrderBlock& b) { return urr::is_local(b.kind); });
}

std::string OrderSpec::describe() const {
  std::string out;
  for (const auto& block : blocks_) {
    if (!out.empty()) out += ",";
    out += std::string(block_code(block.kind)) + "(" + std::to_string(block.vars.size()) + ")";
  }
  return out;
}

}  // namespace urr
