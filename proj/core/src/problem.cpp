#include "urr/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "urr/errors.hpp"
#include "urr/parse.hpp"

namespace urr {

const VarietyPresentation& Problem::variety(const std::string& name) const {
  auto it = varieties.find(name);
  if (it == varieties.end()) fail(ErrorKind::PreconditionViolated, "no variety named " + name);
  return it->second;
}

std::vector<Poly> Problem::ideal(const std::string& name) const {
  if (auto it = ideals.find(name); it != ideals.end()) return it->second;
  if (auto it = varieties.find(name); it != varieties.end()) return it->second.gens();
  fail(ErrorKind::PreconditionViolated, "no ideal or variety named " + name);
}

const Poly& Problem::poly(const std::string& name) const {
  auto it = polys.find(name);
  if (it == polys.end()) fail(ErrorKind::PreconditionViolated, "no polynomial named " + name);
  return it->second;
}

const RationalMap& Problem::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) fail(ErrorKind::PreconditionViolated, "no map named " + name);
  return it->second;
}

const Point& Problem::base_point() const {
  if (!point) fail(ErrorKind::PreconditionViolated, "the problem declares no point");
  return *point;
}

namespace {

// A piece of a line with its 1-based starting column.
struct Span {
  std::string_view text;
  std::size_t column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

Span trim(Span s) {
  while (!s.text.empty() && is_space(s.text.front())) {
    s.text.remove_prefix(1);
    ++s.column;
  }
  while (!s.text.empty() && is_space(s.text.back())) s.text.remove_suffix(1);
  return s;
}

std::vector<Span> words(Span s) {
  std::vector<Span> out;
  std::size_t i = 0;
  while (i < s.text.size()) {
    while (i < s.text.size() && is_space(s.text[i])) ++i;
    std::size_t start = i;
    while (i < s.text.size() && !is_space(s.text[i])) ++i;
    if (i > start) out.push_back({s.text.substr(start, i - start), s.column + start});
  }
  return out;
}

std::vector<Span> split(Span s, char sep) {
  std::vector<Span> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    if (i == s.text.size() || s.text[i] == sep) {
      out.push_back(trim({s.text.substr(start, i - start), s.column + start}));
      start = i + 1;
    }
  }
  return out;
}

// Text after the first word.
Span rest_after(Span line, const Span& first) {
  const std::size_t offset = first.column - line.column + first.text.size();
  return trim({line.text.substr(offset), line.column + offset});
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      lines_.push_back(line);
      start = end + 1;
    }
  }

  Problem run() {
    Problem pb;
    while (next()) {
      const auto w = words(line_);
      const std::string_view key = w[0].text;
      const Span rest = rest_after(line_, w[0]);
      if (key == "field") {
        if (rest.text != "Q") error(rest, "only the field Q is supported");
      } else if (key == "ring") {
        if (pb.ring) error(w[0], "ring declared twice");
        pb.ring = make_ring(words(rest), w[0]);
      } else if (key == "variety") {
        variety_block(pb, name_of(w, 2));
      } else if (key == "ideal") {
        auto [name, body] = assignment(rest);
        require_ring(pb, w[0]);
        std::vector<Poly> gens;
        for (const auto& piece : split(body, ',')) gens.push_back(poly(piece, pb.ring));
        pb.ideals.insert_or_assign(std::string(name.text), std::move(gens));
      } else if (key == "poly") {
        auto [name, body] = assignment(rest);
        require_ring(pb, w[0]);
        pb.polys.insert_or_assign(std::string(name.text), poly(body, pb.ring));
      } else if (key == "point") {
        require_ring(pb, w[0]);
        Point p;
        for (std::size_t k = 1; k < w.size(); ++k) p.push_back(rat(w[k]));
        if (p.size() != pb.ring->arity()) error(w[0], "point has the wrong number of coordinates");
        pb.point = std::move(p);
      } else if (key == "map") {
        map_block(pb, name_of(w, 2));
      } else if (key == "task") {
        if (w.size() < 2) error(w[0], "task needs a kind");
        const std::string kind(w[1].text);
        if (std::find(std::begin(kTaskNames), std::end(kTaskNames), kind) == std::end(kTaskNames)) {
          error(w[1], "unknown task " + kind);
        }
        if (!pb.task.empty()) error(w[0], "only one task per problem");
        pb.task = kind;
        for (std::size_t k = 2; k < w.size(); ++k) pb.args.emplace_back(w[k].text);
      } else {
        error(w[0], "unknown keyword " + std::string(key));
      }
    }
    if (!pb.ring) throw SyntaxError("missing ring declaration", 1, lines_.size());
    return pb;
  }

 private:
  bool next() {
    while (index_ < lines_.size()) {
      line_ = trim({lines_[index_], 1});
      ++index_;
      if (!line_.text.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void error(const Span& at, const std::string& what) const {
    throw SyntaxError(what, at.column, index_);
  }

  [[noreturn]] void error_at(std::size_t line, const Span& at, const std::string& what) const {
    throw SyntaxError(what, at.column, line);
  }

  std::string name_of(const std::vector<Span>& w, std::size_t count) const {
    if (w.size() != count) error(w[0], std::string(w[0].text) + " expects a single name");
    return std::string(w[1].text);
  }

  void require_ring(const Problem& pb, const Span& at) const {
    if (!pb.ring) error(at, "ring must be declared first");
  }

  RingPtr make_ring(const std::vector<Span>& names, const Span& at) const {
    std::vector<std::string> out;
    for (const auto& n : names) out.emplace_back(n.text);
    if (out.empty()) error(at, "ring needs at least one variable");
    try {
      return RingCtx::make(std::move(out));
    } catch (const Error& e) {
      error(at, e.what());
    }
  }

  std::pair<Span, Span> assignment(Span rest) const {
    auto eq = rest.text.find('=');
    if (eq == std::string_view::npos) error(rest, "expected NAME = ...");
    Span name = trim({rest.text.substr(0, eq), rest.column});
    Span body = trim({rest.text.substr(eq + 1), rest.column + eq + 1});
    if (name.text.empty() || words(name).size() != 1) error(rest, "expected a single name");
    return {name, body};
  }

  Poly poly(Span s, const RingPtr& ring) const {
    if (s.text.empty()) error(s, "empty polynomial");
    try {
      return parse_poly(s.text, ring);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.message(), s.column + e.column() - 1, index_);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnknownVariable) error(s, e.what());
      throw;
    }
  }

  Rat rat(const Span& s) const {
    try {
      return parse_rat(s.text);
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.message(), s.column + e.column() - 1, index_);
    }
  }

  void variety_block(Problem& pb, const std::string& name) {
    require_ring(pb, line_);
    const Span header = line_;
    const std::size_t header_line = index_;
    std::vector<Poly> gens;
    std::optional<std::size_t> dim;
    bool prime = true;
    while (true) {
      if (!next()) error_at(header_line, header, "variety block is not closed by end");
      const auto w = words(line_);
      const Span rest = rest_after(line_, w[0]);
      if (w[0].text == "end") break;
      if (w[0].text == "ideal") {
        for (const auto& piece : split(rest, ',')) gens.push_back(poly(piece, pb.ring));
      } else if (w[0].text == "dim") {
        if (w.size() != 2) error(w[0], "dim expects a natural number");
        Rat d = rat(w[1]);
        if (d < 0 || d.get_den() != 1) error(w[1], "dim expects a natural number");
        dim = static_cast<std::size_t>(d.get_num().get_ui());
      } else if (w[0].text == "prime") {
        if (rest.text == "yes") {
          prime = true;
        } else if (rest.text == "no") {
          prime = false;
        } else {
          error(rest, "prime expects yes or no");
        }
      } else {
        error(w[0], "unknown variety field " + std::string(w[0].text));
      }
    }
    if (!dim) error_at(header_line, header, "variety " + name + " needs a dim line");
    if (gens.empty()) {
      if (*dim != pb.ring->arity()) error_at(header_line, header, "the zero ideal has full dimension");
      pb.varieties.insert_or_assign(name, VarietyPresentation::affine(pb.ring));
    } else {
      try {
        pb.varieties.insert_or_assign(
            name, VarietyPresentation::make(pb.ring, std::move(gens), *dim, prime));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Syntax) throw;
        fail(e.kind(), "variety " + name + " (line " + std::to_string(header_line) + "): " +
                           e.what());
      }
    }
  }

  void map_block(Problem& pb, const std::string& name) {
    require_ring(pb, line_);
    const Span header = line_;
    const std::size_t header_line = index_;
    RingPtr source = pb.ring;
    std::optional<std::string> source_variety;
    std::optional<VarietyPresentation> target;
    std::vector<std::pair<Span, Span>> coords;
    while (true) {
      if (!next()) error_at(header_line, header, "map block is not closed by end");
      const auto w = words(line_);
      const Span rest = rest_after(line_, w[0]);
      if (w[0].text == "end") break;
      if (w[0].text == "source" || w[0].text == "target") {
        if (w.size() < 2) error(w[0], "expected a variety name or affine");
        RingPtr ring;
        std::optional<VarietyPresentation> var;
        if (w[1].text == "affine") {
          ring = make_ring(std::vector<Span>(w.begin() + 2, w.end()), w[1]);
          var = VarietyPresentation::affine(ring);
        } else if (w[1].text == "ambient" && w.size() == 2) {
          ring = pb.ring;
          var = VarietyPresentation::affine(ring);
        } else if (w.size() == 2) {
          auto it = pb.varieties.find(std::string(w[1].text));
          if (it == pb.varieties.end()) error(w[1], "unknown variety " + std::string(w[1].text));
          ring = pb.ring;
          var = it->second;
          if (w[0].text == "source") source_variety = it->first;
        } else {
          error(w[1], "expected a variety name or affine");
        }
        if (w[0].text == "source") {
          source = ring;
        } else {
          target = std::move(var);
        }
      } else if (w[0].text == "coord") {
        auto parts = split(rest, ';');
        if (parts.size() > 2 || parts[0].text.empty()) error(rest, "coord expects P or P ; Q");
        coords.emplace_back(parts[0], parts.size() == 2 ? parts[1] : Span{"1", rest.column});
      } else {
        error(w[0], "unknown map field " + std::string(w[0].text));
      }
    }
    if (!target) error_at(header_line, header, "map " + name + " needs a target");
    if (coords.size() != target->ambient_dim()) {
      error_at(header_line, header, "map " + name + " has " + std::to_string(coords.size()) +
                        " coordinates but its target has arity " +
                        std::to_string(target->ambient_dim()));
    }
    RationalMap m{source, {}, std::move(*target)};
    for (const auto& [num, den] : coords) {
      Poly d = poly(den, source);
      if (d.is_zero()) error(den, "zero denominator");
      m.coords.push_back(Fraction{poly(num, source), std::move(d)});
    }
    pb.maps.insert_or_assign(name, std::move(m));
    if (source_variety) pb.map_sources.insert_or_assign(name, *source_variety);
  }

  std::vector<std::string_view> lines_;
  std::size_t index_ = 0;
  Span line_{};
};

}  // namespace

Problem parse_problem(std::string_view text) { return Parser(text).run(); }

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::PreconditionViolated, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace urr
