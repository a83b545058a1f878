#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urr/variety.hpp"

namespace urr {

// A parsed problem file; see docs/problem-format.md for the grammar.
struct Problem {
  RingPtr ring;
  std::map<std::string, VarietyPresentation> varieties;
  std::map<std::string, std::vector<Poly>> ideals;
  std::map<std::string, Poly> polys;
  std::map<std::string, RationalMap> maps;
  // Map name to the variety named on its source line, when one was named.
  std::map<std::string, std::string> map_sources;
  std::optional<Point> point;
  std::string task;
  std::vector<std::string> args;

  const VarietyPresentation& variety(const std::string& name) const;
  // A named ideal, or the ideal of a named variety.
  std::vector<Poly> ideal(const std::string& name) const;
  const Poly& poly(const std::string& name) const;
  const RationalMap& map(const std::string& name) const;
  const Point& base_point() const;
};

// Throws SyntaxError with 1-based line and column, and Error for semantic
// problems (unknown names, wrong dimensions).
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

inline constexpr std::string_view kTaskNames[] = {
    "gb", "member", "dim", "smooth", "genpos", "sigma", "lift", "retract", "uniformize", "check"};

}  // namespace urr
