#include <benchmark/benchmark.h>

#include <random>

#include "urr/bundle.hpp"
#include "urr/groebner.hpp"
#include "urr/parse.hpp"
#include "urr/pipeline.hpp"
#include "urr/problem.hpp"
#include "urr/tasks.hpp"

namespace {

const std::string kProblems = URR_PROBLEMS_DIR;

urr::Poly random_poly(const urr::RingPtr& r, std::mt19937_64& rng, int degree, int terms) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> exp(0, degree);
  urr::Poly out(r);
  for (int k = 0; k < terms; ++k) {
    urr::Monomial m;
    int left = degree;
    for (std::size_t v = 0; v < r->arity() && left > 0; ++v) {
      const int e = std::min(left, exp(rng));
      m.exp[v] = static_cast<std::uint16_t>(e);
      left -= e;
    }
    out += urr::Poly::monomial(r, m, coef(rng));
  }
  return out;
}

void BM_GrevlexBasis(benchmark::State& state) {
  const auto r = urr::RingCtx::make({"x", "y", "z"});
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  std::vector<urr::Poly> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_poly(r, rng, 3, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(urr::std_basis(gens, urr::OrderSpec::grevlex(3)));
  }
}
BENCHMARK(BM_GrevlexBasis)->DenseRange(1, 4);

void BM_LexBasis(benchmark::State& state) {
  const auto r = urr::RingCtx::make({"x", "y", "z"});
  const auto gens = std::vector<urr::Poly>{
      urr::parse_poly("-x^3 - x*y^2 - 3*y*z", r), urr::parse_poly("-3*y^3 - 3*x*y*z - x*z^2", r),
      urr::parse_poly("3*x^2*z - x", r)};
  for (auto _ : state) benchmark::DoNotOptimize(urr::std_basis(gens, urr::OrderSpec::lex(3)));
}
BENCHMARK(BM_LexBasis);

void BM_LocalMembership(benchmark::State& state) {
  const auto r = urr::RingCtx::make({"x", "y"});
  const std::vector<urr::Poly> gens{urr::parse_poly("x^2 - 2*x + y^2", r)};
  const urr::Poly f = urr::parse_poly("x^3 - 2*x^2 + x*y^2", r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(urr::member(f, gens, urr::OrderSpec::local(2), urr::zero_point(2)));
  }
}
BENCHMARK(BM_LocalMembership);

void BM_TaskOnFixture(benchmark::State& state, const std::string& name) {
  const urr::Problem pb = urr::load_problem(kProblems + "/" + name + ".problem");
  urr::TaskOptions options;
  options.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(urr::run_task(pb, pb.task, {}, options));
}
BENCHMARK_CAPTURE(BM_TaskOnFixture, circle, std::string("circle"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TaskOnFixture, circle_uniformize, std::string("circle_uniformize"))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TaskOnFixture, line, std::string("line"))->Unit(benchmark::kMillisecond);

void BM_CheckBundle(benchmark::State& state) {
  const urr::Problem pb = urr::load_problem(kProblems + "/circle.problem");
  urr::TaskOptions options;
  options.seed = 7;
  const urr::Bundle bundle = urr::parse_bundle(urr::serialize_bundle(urr::run_task(pb, pb.task, {}, options)));
  for (auto _ : state) benchmark::DoNotOptimize(urr::check_bundle(bundle));
}
BENCHMARK(BM_CheckBundle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
