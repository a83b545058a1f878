#include "urr/poly.hpp"

#include <algorithm>

#include "urr/errors.hpp"

namespace urr {

namespace {

bool term_before(const Term& a, const Term& b) { return a.mono > b.mono; }

// Sorts descending and merges equal monomials, dropping zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rat sum = terms[i].coef;
    while (j < terms.size() && terms[j].mono == terms[i].mono) sum += terms[j++].coef;
    if (sum != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merges two descending term lists, b scaled by `scale`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        const Rat& scale, const Monomial* shift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial bm;
  auto b_mono = [&](std::size_t k) -> const Monomial& {
    if (!shift) return b[k].mono;
    bm = b[k].mono * *shift;
    return bm;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial& mb = b_mono(j);
    if (i == a.size() || a[i].mono < mb) {
      out.push_back(Term{mb, b[j].coef * scale});
      ++j;
    } else if (mb < a[i].mono) {
      out.push_back(a[i++]);
    } else {
      Rat c = a[i].coef + b[j].coef * scale;
      if (c != 0) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize(terms_);
  for (const auto& t : terms_) check_degree(t.mono);
}

Poly Poly::constant(RingPtr ring, const Rat& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) fail(ErrorKind::ArityMismatch, "variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(std::move(ring), m, 1);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rat& c) {
  Poly p(std::move(ring));
  if (c != 0) {
    p.check_degree(m);
    p.terms_.push_back(Term{m, c});
  }
  return p;
}

void Poly::check_degree(const Monomial& m) const {
  if (m.degree() > ring_->degree_cap()) {
    fail(ErrorKind::LimitExceeded, "total degree " + std::to_string(m.degree()) +
                                       " exceeds cap " + std::to_string(ring_->degree_cap()));
  }
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rat Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_before);
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

int Poly::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

const Term& Poly::leading(const OrderSpec& order) const {
  if (terms_.empty()) fail(ErrorKind::Internal, "leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (order.less(best->mono, terms_[i].mono)) best = &terms_[i];
  }
  return *best;
}

int Poly::ecart(const OrderSpec& order) const {
  return total_degree() - static_cast<int>(leading(order).mono.degree());
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(*ring_, *other.ring_);
  terms_ = merge(terms_, other.terms_, Rat(1), nullptr);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(*ring_, *other.ring_);
  terms_ = merge(terms_, other.terms_, Rat(-1), nullptr);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(*a.ring_, *b.ring_);
  Poly out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    out = large.times_term(small.terms_[0].coef, small.terms_[0].mono);
    return out;
  }
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) products.push_back(Term{s.mono * l.mono, s.coef * l.coef});
  }
  normalize(products);
  for (const auto& t : products) out.check_degree(t.mono);
  out.terms_ = std::move(products);
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

void Poly::add_scaled(const Rat& c, const Monomial& m, const Poly& g) {
  require_same_ring(*ring_, *g.ring_);
  if (c == 0 || g.is_zero()) return;
  for (const auto& t : g.terms_) check_degree(t.mono * m);
  terms_ = merge(terms_, g.terms_, c, &m);
}

Poly Poly::times_term(const Rat& c, const Monomial& m) const {
  Poly out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial p = t.mono * m;
    check_degree(p);
    out.terms_.push_back(Term{p, t.coef * c});
  }
  return out;
}

Poly Poly::truncated(unsigned bound) const {
  Poly out(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() < bound) out.terms_.push_back(t);
  }
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= ring_->arity()) fail(ErrorKind::ArityMismatch, "derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.mono.exp[var];
    if (e == 0) continue;
    Term d{t.mono, t.coef * e};
    d.mono.exp[var] = static_cast<std::uint16_t>(e - 1);
    out.push_back(std::move(d));
  }
  return Poly(ring_, std::move(out));
}

Rat Poly::evaluate(const Point& p) const {
  const std::size_t n = ring_->arity();
  if (p.size() != n) fail(ErrorKind::ArityMismatch, "point arity does not match ring");
  std::vector<std::vector<Rat>> powers(n, std::vector<Rat>{Rat(1)});
  Rat sum = 0;
  for (const auto& t : terms_) {
    Rat v = t.coef;
    for (std::size_t i = 0; i < n; ++i) {
      auto e = t.mono.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e) pw.push_back(pw.back() * p[i]);
      v *= pw[e];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::compose(std::span<const Poly> images) const {
  const std::size_t n = ring_->arity();
  if (images.size() != n) fail(ErrorKind::ArityMismatch, "substitution arity does not match ring");
  if (n == 0) {
    fail(ErrorKind::PreconditionViolated, "cannot compose a polynomial over an empty ring");
  }
  const RingPtr& target = images[0].ring();
  for (const auto& img : images) require_same_ring(*target, *img.ring());
  std::vector<std::vector<Poly>> powers(n, std::vector<Poly>{constant(target, 1)});
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Poly v = constant(target, t.coef);
    for (std::size_t i = 0; i < n; ++i) {
      auto e = t.mono.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      v *= pw[e];
    }
    acc.insert(acc.end(), v.terms_.begin(), v.terms_.end());
  }
  return Poly(target, std::move(acc));
}

Poly Poly::remap(const RingPtr& target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_->arity()) fail(ErrorKind::ArityMismatch, "remap arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (index_map[i] >= target->arity()) fail(ErrorKind::ArityMismatch, "remap target out of range");
      m.exp[index_map[i]] = static_cast<std::uint16_t>(m.exp[index_map[i]] + t.mono.exp[i]);
    }
    out.push_back(Term{m, t.coef});
  }
  return Poly(target, std::move(out));
}

Poly translate(const Poly& f, const Point& p) {
  const auto& ring = f.ring();
  if (p.size() != ring->arity()) fail(ErrorKind::ArityMismatch, "translation arity mismatch");
  if (f.is_constant()) return f;
  std::vector<Poly> images;
  images.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    images.push_back(Poly::variable(ring, i) + Poly::constant(ring, p[i]));
  }
  return f.compose(images);
}

Poly linear_change(const Poly& f, const Matrix& a) {
  const auto& ring = f.ring();
  const std::size_t n = ring->arity();
  if (a.rows() != n || a.cols() != n) fail(ErrorKind::ArityMismatch, "change matrix shape mismatch");
  if (a.determinant() == 0) fail(ErrorKind::SingularMatrix, "coordinate change is not invertible");
  if (f.is_constant()) return f;
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly img(ring);
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != 0) img += Poly::variable(ring, j) * a(i, j);
    }
    images.push_back(std::move(img));
  }
  return f.compose(images);
}

std::vector<Poly> variables(const RingPtr& ring) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < ring->arity(); ++i) out.push_back(Poly::variable(ring, i));
  return out;
}

Point negated(const Point& p) {
  Point out = p;
  for (auto& c : out) c = -c;
  return out;
}

Poly embed(const Poly& f, const RingPtr& target) {
  const auto& names = f.ring()->names();
  if (target->arity() < names.size() ||
      !std::equal(names.begin(), names.end(), target->names().begin())) {
    fail(ErrorKind::ArityMismatch, "target ring does not extend the source ring");
  }
  return Poly(target, f.terms());
}

bool involves_only_first(const Poly& f, std::size_t count) {
  for (const auto& t : f.terms()) {
    for (std::size_t i = count; i < kMaxVars; ++i) {
      if (t.mono.exp[i] != 0) return false;
    }
  }
  return true;
}

Poly project(const Poly& f, const RingPtr& target) {
  if (!involves_only_first(f, target->arity())) {
    fail(ErrorKind::PreconditionViolated, "polynomial involves eliminated variables");
  }
  return Poly(target, f.terms());
}

}  // namespace urr
