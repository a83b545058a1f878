#include "urr/generic_position.hpp"

#include <random>

#include "urr/errors.hpp"

namespace urr {

std::vector<std::size_t> SigmaFrame::base_block() const {
  std::vector<std::size_t> out;
  for (std::size_t i = w_size; i < change.rows(); ++i) out.push_back(i);
  return out;
}

namespace {

// Uniform integer in {-bound..bound} by rejection, independent of the
// standard library's distribution implementation.
int draw_entry(std::mt19937_64& rng, int bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<int>(r % span) - bound;
}

void check_preconditions(const VarietyPresentation& x, const Ideal& i, const Point& x0) {
  require_same_ring(*x.ring(), *i.ring());
  if (!x.contains(x0)) fail(ErrorKind::PreconditionViolated, "base point is not on X");
  if (!smooth_at(x, x0)) fail(ErrorKind::PreconditionViolated, "X is not smooth at the base point");
  if (i.is_zero()) fail(ErrorKind::PreconditionViolated, "the ideal I is zero");
  for (const auto& g : i.gens()) {
    if (g.evaluate(x0) != 0) {
      fail(ErrorKind::PreconditionViolated, "a generator of I does not vanish at the base point");
    }
  }
  if (x.dim() == 0) fail(ErrorKind::PreconditionViolated, "X has dimension 0");
}

}  // namespace

SampledChange sample_change(std::size_t n, std::size_t m, std::uint64_t seed,
                            std::uint64_t stream, int bound) {
  if (m == 0 || m > n) fail(ErrorKind::PreconditionViolated, "sample_change needs 0 < m <= n");
  if (bound < 1) fail(ErrorKind::PreconditionViolated, "entry bound must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  SampledChange out{Matrix(n, n), 0};
  do {
    ++out.draws;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) out.change(r, c) = draw_entry(rng, bound);
    }
  } while (out.change.determinant() == 0);
  return out;
}

Poly to_adapted(const Poly& f, const Matrix& change_inverse, const Point& translation) {
  return linear_change(translate(f, translation), change_inverse);
}

GenericityReport verify_frame(const VarietyPresentation& x, const Ideal& i, const Point& x0,
                              const Matrix& change, const EngineLimits& limits) {
  check_preconditions(x, i, x0);
  const std::size_t n = x.ambient_dim();
  const std::size_t m = x.dim();
  if (change.rows() != n || change.cols() != n) {
    fail(ErrorKind::ArityMismatch, "coordinate change has wrong size");
  }
  const Matrix inv = change.inverse();
  const RingPtr& ring = x.ring();

  std::vector<Poly> x_gens;
  for (const auto& g : x.gens()) x_gens.push_back(to_adapted(g, inv, x0));
  std::vector<Poly> i_gens;
  for (const auto& g : i.gens()) i_gens.push_back(to_adapted(g, inv, x0));
  std::vector<std::size_t> base;
  for (std::size_t k = n - m; k < n; ++k) base.push_back(k);

  GenericityReport report;

  // (a) T_0 X meets W only in 0.
  Matrix stacked(0, n);
  if (!x_gens.empty()) stacked = jacobian_at(x_gens, zero_point(n));
  Matrix base_rows(m, n);
  for (std::size_t r = 0; r < m; ++r) base_rows(r, base[r]) = 1;
  stacked = stacked.stacked(base_rows);
  report.transversal_rank = stacked.rank();
  report.transversal = report.transversal_rank == n;
  if (!report.transversal) {
    report.failure = "W is not transversal to X";
    return report;
  }

  // (c) Noether finiteness over the base block.
  Ideal x_ideal(ring, x_gens);
  report.noether_finite = finite_over(x_ideal, base, limits);
  if (!report.noether_finite) {
    report.failure = "X is not finite over the base block";
    return report;
  }

  // (b) Z(I(X) + I + base forms) is the origin over the algebraic closure.
  std::vector<Poly> j_gens = x_gens;
  j_gens.insert(j_gens.end(), i_gens.begin(), i_gens.end());
  for (auto b : base) j_gens.push_back(Poly::variable(ring, b));
  Ideal j(ring, j_gens);
  report.only_origin = true;
  for (std::size_t k = 0; k < n; ++k) {
    auto rec = radical_member(Poly::variable(ring, k), j, limits);
    if (!rec) {
      report.only_origin = false;
      report.only_origin_certs.clear();
      report.failure = "W meets Z(I) outside the origin";
      return report;
    }
    report.only_origin_certs.push_back(std::move(*rec));
  }
  return report;
}

SigmaFrame find_frame(const VarietyPresentation& x, const Ideal& i, const Point& x0,
                      const FrameOptions& options, const EngineLimits& limits) {
  check_preconditions(x, i, x0);
  const std::size_t n = x.ambient_dim();
  const std::size_t m = x.dim();

  auto accept = [&](const Matrix& change, GenericityReport report) {
    const Matrix inv = change.inverse();
    std::vector<Poly> x_gens;
    for (const auto& g : x.gens()) x_gens.push_back(to_adapted(g, inv, x0));
    std::vector<Poly> i_gens;
    for (const auto& g : i.gens()) i_gens.push_back(to_adapted(g, inv, x0));
    report.seed = options.seed;
    return SigmaFrame{change,
                      x0,
                      n - m,
                      x,
                      i,
                      VarietyPresentation::make(x.ring(), std::move(x_gens), m,
                                                x.assume_prime(), limits),
                      Ideal(x.ring(), std::move(i_gens)),
                      std::move(report)};
  };

  if (options.change) {
    GenericityReport report = verify_frame(x, i, x0, *options.change, limits);
    if (!report.all_green()) {
      fail(ErrorKind::PreconditionViolated, "supplied coordinate change rejected: " + report.failure);
    }
    report.tries_used = 1;
    return accept(*options.change, std::move(report));
  }

  std::string failures;
  std::size_t draws = 0;
  for (std::size_t k = 0; k < options.max_tries; ++k) {
    SampledChange s = sample_change(n, m, options.seed, k, options.entry_bound);
    draws += s.draws;
    GenericityReport report = verify_frame(x, i, x0, s.change, limits);
    if (report.all_green()) {
      report.tries_used = draws;
      return accept(s.change, std::move(report));
    }
    failures += "\n  try " + std::to_string(k + 1) + ": " + report.failure;
  }
  fail(ErrorKind::ExhaustedTries,
       "no generic frame in " + std::to_string(options.max_tries) + " tries" + failures);
}

}  // namespace urr
