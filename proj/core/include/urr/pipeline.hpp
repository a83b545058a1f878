#pragma once

#include <optional>
#include <vector>

#include "urr/denominators.hpp"
#include "urr/lift.hpp"

namespace urr {

struct PipelineOptions {
  FrameOptions frame{};
  LiftOptions lift{};
  EngineLimits limits{};
};

// Intermediate data of the non-trivial branch.
struct LocalizationTrace {
  Poly q;  // product of the distinct denominators, reduced modulo I(X)
  Matrix change;
  GenericityReport report;
  std::vector<Poly> sigma;  // over (x, t)
  RingPtr product_ring;
  std::vector<LocalFrac> psi;
  std::vector<unsigned> lift_degrees;
  std::vector<unsigned> lift_orders;
  std::vector<LocalFrac> composed;  // germs of F_j o phi on X x W
};

struct GermMap {
  std::vector<LocalFrac> components;  // over the source ring, at x0
  VarietyPresentation target;
  bool short_circuit = false;
  std::optional<LocalizationTrace> trace;
  // Every certificate produced along the way, the final G|X = F|X records
  // included.
  std::vector<CertRecord> certs;
  // g(G) with denominators cleared is the zero polynomial, per generator of
  // the target ideal.
  std::vector<bool> target_identically_zero;

  std::vector<Fraction> fractions() const;
};

// G regular at x0 with G|X = F|X. Throws NotSmoothAtPoint,
// NotRegularAtPoint, LimitExceeded, ExhaustedTries, DescentFailed.
GermMap localize_map(const VarietyPresentation& x, const VarietyPresentation& y,
                     const RationalMap& f, const Point& x0, const PipelineOptions& options = {});

struct RetractionResult {
  GermMap g;
  std::vector<Fraction> composite;  // F = r o i on the ambient space
  Poly h_v;            // V' = X minus Z(h_v)
  Poly h_u;            // U' = {h_u != 0} minus Z(numerator of h_v o G)
  Fraction pullback;   // h_v o G
  std::vector<CertRecord> identity_certs;  // G|X = id
};

// `ambient_i` extends i to K^n; when `i_on_x` is given it must agree with
// ambient_i on X. Throws CompositionUndefined and the localize_map errors.
RetractionResult uniformize(const VarietyPresentation& x, const RationalMap& ambient_i,
                            const RationalMap& r, const Point& x0,
                            const std::optional<RationalMap>& i_on_x = std::nullopt,
                            const PipelineOptions& options = {});

// Exact Jacobian of the germ at its base point.
Matrix germ_derivative(const std::vector<LocalFrac>& g);

// M*M == M, rank m, columns in the tangent space of X at x0.
bool is_tangent_projection(const Matrix& m, const VarietyPresentation& x, const Point& x0);

}  // namespace urr
