#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urr/variety.hpp"

namespace urr {

// Adapted coordinates are a = change * (x - translation). The first n - m
// adapted coordinates form the w-block (they carry the t-variables later);
// the last m form the base block. W is the zero set of the base block.
struct GenericityReport {
  bool transversal = false;
  std::size_t transversal_rank = 0;  // rank of Jacobian stacked with base-block forms
  bool only_origin = false;
  std::vector<CertRecord> only_origin_certs;  // one per adapted coordinate
  bool noether_finite = false;
  std::size_t tries_used = 0;  // matrices drawn, singular redraws included
  std::uint64_t seed = 0;
  std::string failure;  // first failed check, empty when all green

  bool all_green() const noexcept { return transversal && only_origin && noether_finite; }
};

struct SigmaFrame {
  Matrix change;
  Point translation;
  std::size_t w_size = 0;  // n - m
  VarietyPresentation x;
  Ideal i;
  VarietyPresentation x_adapted;
  Ideal i_adapted;
  GenericityReport report;

  std::vector<std::size_t> base_block() const;
  Matrix change_inverse() const { return change.inverse(); }
};

struct SampledChange {
  Matrix change;
  std::size_t draws = 0;  // singular draws are redrawn and counted
};

inline constexpr int kDefaultEntryBound = 5;
inline constexpr std::size_t kDefaultMaxTries = 32;

// Entries uniform in {-bound..bound}, redrawn until invertible.
// Deterministic in (seed, stream).
SampledChange sample_change(std::size_t n, std::size_t m, std::uint64_t seed,
                            std::uint64_t stream = 0, int bound = kDefaultEntryBound);

// f(change^-1 a + translation).
Poly to_adapted(const Poly& f, const Matrix& change_inverse, const Point& translation);

// Throws PreconditionViolated naming the violated requirement.
GenericityReport verify_frame(const VarietyPresentation& x, const Ideal& i, const Point& x0,
                              const Matrix& change, const EngineLimits& limits = {});

struct FrameOptions {
  std::size_t max_tries = kDefaultMaxTries;
  std::uint64_t seed = 0;
  int entry_bound = kDefaultEntryBound;
  // Verify this change instead of sampling.
  std::optional<Matrix> change;
};

// Samples changes (try k uses stream k) until one is all green.
// Throws ExhaustedTries listing the per-try failures.
SigmaFrame find_frame(const VarietyPresentation& x, const Ideal& i, const Point& x0,
                      const FrameOptions& options = {}, const EngineLimits& limits = {});

}  // namespace urr
