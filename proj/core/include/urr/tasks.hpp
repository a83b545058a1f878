#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urr/bundle.hpp"
#include "urr/pipeline.hpp"
#include "urr/problem.hpp"

namespace urr {

struct TaskOptions {
  std::uint64_t seed = 0;
  std::size_t max_tries = kDefaultMaxTries;
  unsigned max_lift_degree = 8;
  unsigned max_jet_order = 12;
  std::optional<std::string> order;  // "dp", "ds", "lp(1),dp(2)", ...
  bool timings = false;
  EngineLimits limits{};

  PipelineOptions pipeline() const;
};

// Runs `task` (one of kTaskNames other than "check") with `args` naming the
// problem's objects; empty args fall back to the problem's own task line and
// then to the only object of the needed kind.
Bundle run_task(const Problem& problem, const std::string& task,
                const std::vector<std::string>& args, const TaskOptions& options = {});

}  // namespace urr
