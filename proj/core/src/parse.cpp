#include "urr/parse.hpp"

#include <algorithm>
#include <cctype>

#include "urr/errors.hpp"

namespace urr {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly run() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError("empty expression", pos_ + 1);
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_ + 1);
    }
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly first = term();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = unary();
        if (!d.is_constant()) throw SyntaxError("division by a non-constant", at + 1);
        if (d.is_zero()) throw SyntaxError("division by zero", at + 1);
        acc *= Rat(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      unsigned long e = natural();
      if (e > ring_->degree_cap() && !base.is_constant()) {
        fail(ErrorKind::LimitExceeded, "exponent at column " + std::to_string(start + 1) +
                                           " exceeds the degree cap");
      }
      if (e > 4096) throw SyntaxError("exponent too large", start + 1);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long natural() {
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError("expected a natural number", pos_ + 1);
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) throw SyntaxError("exponent too large", start + 1);
    return std::stoul(std::string(digits));
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of expression", pos_ + 1);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_ + 1);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rat value(std::string(text_.substr(start, pos_ - start)), 10);
      return Poly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        fail(ErrorKind::UnknownVariable,
             "'" + name + "' at column " + std::to_string(start + 1) + " is not a ring variable");
      }
      return Poly::variable(ring_, *idx);
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_ + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const RingCtx& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

std::string to_string(const Poly& f, const OrderSpec& order) {
  if (f.is_zero()) return "0";
  std::vector<const Term*> sorted;
  for (const auto& t : f.terms()) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* a, const Term* b) { return order.less(b->mono, a->mono); });
  std::string out;
  for (const Term* t : sorted) {
    bool negative = t->coef < 0;
    Rat mag = abs(t->coef);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_text(t->mono, *f.ring());
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const Poly& f) {
  return to_string(f, OrderSpec::grevlex(f.ring()->arity()));
}

}  // namespace urr
