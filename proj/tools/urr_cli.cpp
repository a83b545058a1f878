#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "urr/bundle.hpp"
#include "urr/errors.hpp"
#include "urr/tasks.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kPrecondition = 2, kLimits = 3 };

int exit_code(urr::ErrorKind kind) {
  using urr::ErrorKind;
  switch (kind) {
    case ErrorKind::LimitExceeded:
    case ErrorKind::ExhaustedTries:
      return kLimits;
    case ErrorKind::PropertyCheckFailed:
    case ErrorKind::PremiseCertMissing:
    case ErrorKind::DescentFailed:
    case ErrorKind::Internal:
      return kInvalid;
    default:
      return kPrecondition;
  }
}

int report(const urr::Error& e) {
  nlohmann::json j = {{"error", std::string(urr::to_string(e.kind()))}};
  if (const auto* s = dynamic_cast<const urr::SyntaxError*>(&e)) {
    j["message"] = s->message();
    j["line"] = s->line();
    j["column"] = s->column();
  } else {
    j["message"] = e.what();
  }
  std::cerr << j.dump() << "\n";
  return exit_code(e.kind());
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) urr::fail(urr::ErrorKind::PreconditionViolated, "cannot write " + out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular germ retractions with checkable certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  urr::TaskOptions options;
  std::string order;
  std::string out;
  app.add_option("--seed", options.seed, "Seed for the generic change of coordinates");
  app.add_option("--max-tries", options.max_tries, "Frames sampled before giving up");
  app.add_option("--max-lift-degree", options.max_lift_degree, "Largest degree of psi");
  app.add_option("--max-jet-order", options.max_jet_order, "Largest jet order of the lift");
  app.add_option("--order", order, "Monomial order for gb and member (dp, lp, ds, ls, blocks)");
  app.add_option("--out", out, "Write the bundle here instead of standard output");
  app.add_flag("--timings", options.timings, "Record wall-clock timings in the bundle");

  std::string problem_path;
  std::vector<std::string> args;
  std::string task;
  for (std::string_view name : urr::kTaskNames) {
    if (name == "check") continue;
    CLI::App* sub = app.add_subcommand(std::string(name), "Run the " + std::string(name) + " task");
    sub->add_option("problem", problem_path, "Problem file")->required();
    sub->add_option("args", args, "Names of the problem objects to use");
    sub->callback([&task, name] { task = name; });
  }
  std::string bundle_path;
  CLI::App* check = app.add_subcommand("check", "Replay every certificate of a bundle");
  check->add_option("bundle", bundle_path, "Bundle file")->required();
  check->callback([&task] { task = "check"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kPrecondition;
  }
  if (!order.empty()) options.order = order;

  try {
    if (task == "check") {
      const urr::Bundle bundle = urr::load_bundle(bundle_path);
      const urr::CheckSummary summary = urr::check_bundle(bundle);
      if (summary.all_valid()) {
        std::cout << "all certificates valid (" << summary.total << ")\n";
        return kOk;
      }
      std::cout << summary.invalid.size() << " of " << summary.total
                << " certificates invalid:\n";
      for (const auto& label : summary.invalid) std::cout << "  " << label << "\n";
      return kInvalid;
    }
    const urr::Problem problem = urr::load_problem(problem_path);
    const urr::Bundle bundle = urr::run_task(problem, task, args, options);
    emit(urr::serialize_bundle(bundle), out);
    return kOk;
  } catch (const urr::Error& e) {
    return report(e);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kInvalid;
  }
}
