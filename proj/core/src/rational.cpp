#include "urr/rational.hpp"

#include <cctype>

#include "urr/errors.hpp"

namespace urr {

std::string to_string(const Rat& value) { return value.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      digits = true;
    } else if (s[k] == '/' && !slash && digits && k + 1 < s.size()) {
      slash = true;
      digits = false;
    } else {
      throw SyntaxError("malformed rational '" + s + "'", k + 1);
    }
  }
  if (!digits) throw SyntaxError("malformed rational '" + s + "'", s.size() + 1);
  if (s[0] == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw SyntaxError("malformed rational '" + s + "'", 1);
  if (r.get_den() == 0) throw SyntaxError("zero denominator in '" + s + "'", 1);
  r.canonicalize();
  return r;
}

Point zero_point(std::size_t arity) { return Point(arity, Rat(0)); }

}  // namespace urr
