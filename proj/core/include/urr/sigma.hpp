#pragma once

#include <cstddef>
#include <vector>

#include "urr/generic_position.hpp"

namespace urr {

// X x K^extra in the ring (x_1..x_n, t_1..t_extra); same generators.
VarietyPresentation product_presentation(const VarietyPresentation& x, std::size_t extra,
                                         const EngineLimits& limits = {});

// sigma(u, t) = u + change^-1 (t, 0) in the user's coordinates, i.e. adding
// t_l to the l-th adapted w-coordinate.
struct SigmaData {
  SigmaFrame frame;
  VarietyPresentation product;  // X x K^(n-m) over ring (u, t)
  std::vector<Poly> sigma;      // n polynomials over product.ring()
  // Generators of H: those of I(X), then g_j * t_l for each generator g_j of
  // I, l running fastest.
  Ideal h;
  std::size_t t_count = 0;
  std::size_t x_gen_count = 0;
  Point center;  // (x0, 0)

  const RingPtr& ring() const noexcept { return product.ring(); }
  const RingPtr& source_ring() const noexcept { return frame.x.ring(); }
  // Index into h.gens() of g_j * t_l.
  std::size_t h_index(std::size_t j, std::size_t l) const {
    return x_gen_count + j * t_count + l;
  }
  Poly pi(std::size_t i) const { return Poly::variable(ring(), i); }
};

// Builds sigma and H for the ideal I stored in the frame and checks
// sigma(u, 0) = u and that D sigma at (x0, 0) is bijective on
// T X + K^(n-m). Throws PropertyCheckFailed.
SigmaData build_sigma(const SigmaFrame& frame, const EngineLimits& limits = {});

// n x n matrix whose columns are D sigma applied to a tangent basis of X at
// x0 followed by the t-directions.
Matrix sigma_derivative_on_tangent(const SigmaData& data);

}  // namespace urr
