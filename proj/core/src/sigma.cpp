#include "urr/sigma.hpp"

#include "urr/errors.hpp"

namespace urr {

VarietyPresentation product_presentation(const VarietyPresentation& x, std::size_t extra,
                                         const EngineLimits& limits) {
  if (extra == 0) return x;
  RingPtr ring = extend_ring(x.ring(), fresh_names(*x.ring(), "t", extra));
  std::vector<Poly> gens;
  for (const auto& g : x.gens()) gens.push_back(embed(g, ring));
  if (gens.empty()) return VarietyPresentation::affine(ring);
  return VarietyPresentation::make(ring, std::move(gens), x.dim() + extra, x.assume_prime(),
                                   limits);
}

SigmaData build_sigma(const SigmaFrame& frame, const EngineLimits& limits) {
  const VarietyPresentation& x = frame.x;
  const std::size_t n = x.ambient_dim();
  const std::size_t k = frame.w_size;
  VarietyPresentation product = product_presentation(x, k, limits);
  const RingPtr ring = product.ring();
  const Matrix inv = frame.change_inverse();

  std::vector<Poly> sigma;
  for (std::size_t j = 0; j < n; ++j) {
    Poly s = Poly::variable(ring, j);
    for (std::size_t l = 0; l < k; ++l) {
      if (inv(j, l) != 0) s += inv(j, l) * Poly::variable(ring, n + l);
    }
    sigma.push_back(std::move(s));
  }

  std::vector<Poly> h_gens = product.gens();
  for (const auto& g : frame.i.gens()) {
    Poly lifted = embed(g, ring);
    for (std::size_t l = 0; l < k; ++l) h_gens.push_back(lifted * Poly::variable(ring, n + l));
  }

  Point center = frame.translation;
  center.resize(n + k, Rat(0));

  SigmaData data{frame,           std::move(product), std::move(sigma), Ideal(ring, h_gens),
                 k,               x.gens().size(),    std::move(center)};

  // Property (1): sigma(u, 0) = u.
  std::vector<Poly> at_zero = variables(ring);
  for (std::size_t l = 0; l < k; ++l) at_zero[n + l] = Poly(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (data.sigma[j].compose(at_zero) != Poly::variable(ring, j)) {
      fail(ErrorKind::PropertyCheckFailed, "sigma(x, 0) differs from x");
    }
  }
  // Property (2).
  if (sigma_derivative_on_tangent(data).determinant() == 0) {
    fail(ErrorKind::PropertyCheckFailed, "derivative of sigma at (x0, 0) is not bijective");
  }
  return data;
}

Matrix sigma_derivative_on_tangent(const SigmaData& data) {
  const std::size_t n = data.frame.x.ambient_dim();
  const std::size_t k = data.t_count;
  Matrix jac(n, n + k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n + k; ++c) {
      jac(r, c) = data.sigma[r].derivative(c).evaluate(data.center);
    }
  }
  std::vector<Point> dirs;
  for (auto v : tangent_space(data.frame.x, data.frame.translation)) {
    v.resize(n + k, Rat(0));
    dirs.push_back(std::move(v));
  }
  for (std::size_t l = 0; l < k; ++l) {
    Point e = zero_point(n + k);
    e[n + l] = 1;
    dirs.push_back(std::move(e));
  }
  Matrix out(n, dirs.size());
  for (std::size_t c = 0; c < dirs.size(); ++c) {
    auto col = jac * dirs[c];
    for (std::size_t r = 0; r < n; ++r) out(r, c) = col[r];
  }
  return out;
}

}  // namespace urr
