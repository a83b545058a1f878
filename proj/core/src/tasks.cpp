#include "urr/tasks.hpp"

#include <chrono>
#include <functional>

#include "urr/errors.hpp"
#include "urr/parse.hpp"

namespace urr {

PipelineOptions TaskOptions::pipeline() const {
  PipelineOptions out;
  out.frame.max_tries = max_tries;
  out.frame.seed = seed;
  out.lift.max_degree = max_lift_degree;
  out.lift.max_order = max_jet_order;
  out.limits = limits;
  return out;
}

namespace {

using nlohmann::json;

json rat_json(const Rat& r) { return to_string(r); }

json point_json(const Point& p) {
  json out = json::array();
  for (const auto& v : p) out.push_back(rat_json(v));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(point_json(m.row(r)));
  return out;
}

json polys_json(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

json frac_json(const Poly& num, const Poly& den) {
  return {{"num", to_string(num)}, {"den", to_string(den)}};
}

json fracs_json(const std::vector<Fraction>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(frac_json(f.num, f.den));
  return out;
}

json germs_json(const std::vector<LocalFrac>& gs) {
  json out = json::array();
  for (const auto& g : gs) out.push_back(frac_json(g.num, g.den));
  return out;
}

json report_json(const GenericityReport& r) {
  return {{"transversal", r.transversal},
          {"transversal_rank", r.transversal_rank},
          {"only_origin", r.only_origin},
          {"noether_finite", r.noether_finite},
          {"tries_used", r.tries_used},
          {"seed", r.seed}};
}

json frame_json(const SigmaFrame& f) {
  return {{"change", matrix_json(f.change)},
          {"translation", point_json(f.translation)},
          {"w_size", f.w_size},
          {"adapted_ideal_of_x", polys_json(f.x_adapted.gens())},
          {"adapted_ideal", polys_json(f.i_adapted.gens())},
          {"report", report_json(f.report)}};
}

void append(std::vector<CertRecord>& to, const std::vector<CertRecord>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// Resolves positional arguments against the problem's objects.
class Args {
 public:
  Args(const Problem& pb, std::vector<std::string> args) : pb_(pb), args_(std::move(args)) {}

  // Argument `i`, else `conventional` if the problem has such an object, else
  // the only object of the kind.
  template <class Map>
  std::string pick(std::size_t i, const Map& objects, const std::string& conventional,
                   const char* kind) const {
    if (i < args_.size()) return args_[i];
    if (objects.count(conventional)) return conventional;
    if (objects.size() == 1) return objects.begin()->first;
    fail(ErrorKind::PreconditionViolated,
         std::string("name the ") + kind + " to use (argument " + std::to_string(i + 1) + ")");
  }

  std::optional<std::string> optional(std::size_t i) const {
    if (i < args_.size()) return args_[i];
    return std::nullopt;
  }

  // Named ideals and varieties both qualify as ideals.
  std::string pick_ideal(std::size_t i, const std::string& conventional) const {
    if (i < args_.size()) return args_[i];
    if (pb_.ideals.count(conventional) || pb_.varieties.count(conventional)) return conventional;
    if (pb_.ideals.size() == 1) return pb_.ideals.begin()->first;
    if (pb_.ideals.empty() && pb_.varieties.size() == 1) return pb_.varieties.begin()->first;
    fail(ErrorKind::PreconditionViolated,
         "name the ideal to use (argument " + std::to_string(i + 1) + ")");
  }

  std::size_t size() const noexcept { return args_.size(); }

 private:
  const Problem& pb_;
  std::vector<std::string> args_;
};

OrderSpec order_or(const TaskOptions& o, const OrderSpec& fallback) {
  return o.order ? OrderSpec::parse(*o.order, fallback.arity()) : fallback;
}

FrameOptions frame_options(const TaskOptions& o) {
  FrameOptions f;
  f.max_tries = o.max_tries;
  f.seed = o.seed;
  return f;
}

void run_gb(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  const std::string name = a.pick_ideal(0, "I");
  const std::vector<Poly> gens = pb.ideal(name);
  const OrderSpec order = order_or(o, OrderSpec::grevlex(pb.ring->arity()));
  BasisOptions bo;
  bo.track_cofactors = true;
  bo.limits = o.limits;
  const StdBasis basis = std_basis_for(pb.ring, gens, order, bo);
  b.outputs["ideal"] = name;
  b.outputs["order"] = order.describe();
  b.outputs["basis"] = polys_json(basis.generators());
  b.outputs["unit_ideal"] = basis.is_unit_ideal();

  for (std::size_t k = 0; k < basis.size(); ++k) {
    Cert c{basis.generators()[k], Poly::constant(pb.ring, 1), {}, std::nullopt};
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Poly& r = basis.representations()[k][j];
      if (!r.is_zero()) c.cofactors.push_back({j, r});
    }
    b.certificates.push_back(
        {"basis element " + std::to_string(k + 1) + " lies in the ideal", gens, std::move(c)});
  }
  const std::optional<Point> origin =
      order.is_global() ? std::nullopt : std::optional<Point>(zero_point(pb.ring->arity()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    WeakNormalForm nf = mora_weak_nf(gens[j], basis, o.limits);
    if (!nf.remainder.is_zero()) fail(ErrorKind::Internal, "generator does not reduce to zero");
    Cert c{gens[j], nf.unit, {}, origin};
    for (std::size_t k = 0; k < nf.cofactors.size(); ++k) {
      if (!nf.cofactors[k].is_zero()) c.cofactors.push_back({k, nf.cofactors[k]});
    }
    b.certificates.push_back({"generator " + std::to_string(j + 1) + " reduces to zero",
                              basis.generators(), std::move(c)});
  }
}

void run_member(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  const std::string fname = a.pick(0, pb.polys, "f", "polynomial");
  const std::string iname = a.pick_ideal(1, "I");
  const std::vector<Poly> gens = pb.ideal(iname);
  const std::size_t n = pb.ring->arity();
  const OrderSpec order = order_or(o, pb.point ? OrderSpec::local(n) : OrderSpec::grevlex(n));
  const std::optional<Point> center = order.is_global() ? std::nullopt : pb.point;
  if (!order.is_global() && !center) {
    fail(ErrorKind::PreconditionViolated, "a local order needs a point");
  }
  IdealMembership oracle(pb.ring, gens, order, center, o.limits);
  const Poly& f = pb.poly(fname);
  Membership m = oracle.test(f);
  b.outputs["polynomial"] = fname;
  b.outputs["ideal"] = iname;
  b.outputs["order"] = order.describe();
  b.outputs["point"] = center ? point_json(*center) : json(nullptr);
  b.outputs["in"] = m.in;
  if (m.in) {
    b.outputs["unit"] = to_string(m.cert->unit);
    b.certificates.push_back({fname + " in " + iname, gens, std::move(*m.cert)});
  } else {
    b.outputs["remainder"] = to_string(oracle.normal_form(f).remainder);
  }
}

void run_dim(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  const std::string name = a.pick_ideal(0, "X");
  b.outputs["ideal"] = name;
  b.outputs["dim"] = krull_dim(Ideal(pb.ring, pb.ideal(name)), o.limits);
}

void run_smooth(const Problem& pb, const Args& a, const TaskOptions&, Bundle& b) {
  const std::string name = a.pick(0, pb.varieties, "X", "variety");
  const VarietyPresentation& x = pb.variety(name);
  const Point& p = pb.base_point();
  b.outputs["variety"] = name;
  b.outputs["point"] = point_json(p);
  b.outputs["jacobian"] = matrix_json(jacobian_at(x.gens(), p));
  b.outputs["rank"] = jacobian_rank_at(x, p);
  b.outputs["codim"] = x.ambient_dim() - x.dim();
  b.outputs["smooth"] = smooth_at(x, p);
}

SigmaFrame frame_for(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  const std::string xname = a.pick(0, pb.varieties, "X", "variety");
  const std::string iname = a.pick_ideal(1, "I");
  b.outputs["variety"] = xname;
  b.outputs["ideal"] = iname;
  SigmaFrame frame = find_frame(pb.variety(xname), Ideal(pb.ring, pb.ideal(iname)),
                                pb.base_point(), frame_options(o), o.limits);
  b.outputs["frame"] = frame_json(frame);
  append(b.certificates, frame.report.only_origin_certs);
  return frame;
}

void run_genpos(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  frame_for(pb, a, o, b);
}

SigmaData sigma_for(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  SigmaData s = build_sigma(frame_for(pb, a, o, b), o.limits);
  b.outputs["product_ring"] = s.ring()->names();
  b.outputs["sigma"] = polys_json(s.sigma);
  b.outputs["h"] = polys_json(s.h.gens());
  const Matrix d = sigma_derivative_on_tangent(s);
  b.outputs["sigma_derivative"] = matrix_json(d);
  b.outputs["sigma_derivative_det"] = rat_json(d.determinant());
  return s;
}

void run_sigma(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  sigma_for(pb, a, o, b);
}

void run_lift(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  SigmaData s = sigma_for(pb, a, o, b);
  LiftResult lift = solve_psi(s, o.pipeline().lift, o.limits);
  b.outputs["psi"] = germs_json(lift.psi);
  b.outputs["degrees"] = lift.degrees;
  b.outputs["orders"] = lift.orders;
  b.outputs["degree_used"] = lift.degree_used;
  b.outputs["jet_order_used"] = lift.jet_order_used;
  append(b.certificates, lift.certs);
}

json germ_outputs(const GermMap& g) {
  json out = {{"components", germs_json(g.components)},
              {"short_circuit", g.short_circuit},
              {"target_ideal", polys_json(g.target.gens())},
              {"target_identically_zero", g.target_identically_zero}};
  Point at;
  for (const auto& c : g.components) at.push_back(c.value());
  out["value_at_point"] = point_json(at);
  out["derivative_at_point"] = matrix_json(germ_derivative(g.components));
  if (g.trace) {
    const LocalizationTrace& t = *g.trace;
    out["trace"] = {{"q", to_string(t.q)},
                    {"change", matrix_json(t.change)},
                    {"report", report_json(t.report)},
                    {"product_ring", t.product_ring->names()},
                    {"sigma", polys_json(t.sigma)},
                    {"psi", germs_json(t.psi)},
                    {"lift_degrees", t.lift_degrees},
                    {"lift_orders", t.lift_orders},
                    {"composed", germs_json(t.composed)}};
  }
  return out;
}

void run_retract(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  const std::string fname = a.pick(0, pb.maps, "F", "map");
  const RationalMap& f = pb.map(fname);
  std::string xname;
  if (auto given = a.optional(1)) {
    xname = *given;
  } else if (auto it = pb.map_sources.find(fname); it != pb.map_sources.end()) {
    xname = it->second;
  } else {
    xname = a.pick(1, pb.varieties, "X", "variety");
  }
  const VarietyPresentation& x = pb.variety(xname);
  GermMap g = localize_map(x, f.target, f, pb.base_point(), o.pipeline());
  b.outputs["map"] = fname;
  b.outputs["variety"] = xname;
  b.outputs["point"] = point_json(pb.base_point());
  b.outputs["g"] = germ_outputs(g);
  append(b.certificates, g.certs);
}

void run_uniformize(const Problem& pb, const Args& a, const TaskOptions& o, Bundle& b) {
  const std::string iname = a.pick(1, pb.maps, "i", "map i");
  const std::string rname = a.pick(2, pb.maps, "r", "map r");
  std::string xname;
  if (auto given = a.optional(0)) {
    xname = *given;
  } else if (auto it = pb.map_sources.find(iname); it != pb.map_sources.end()) {
    xname = it->second;
  } else {
    xname = a.pick(0, pb.varieties, "X", "variety");
  }
  std::optional<std::string> ambient = a.optional(3);
  if (!ambient && a.size() <= 3 && pb.maps.count("ambient_i")) ambient = "ambient_i";

  const VarietyPresentation& x = pb.variety(xname);
  const Point& x0 = pb.base_point();
  std::optional<RationalMap> i_on_x;
  const RationalMap* ambient_i = &pb.map(iname);
  if (ambient) {
    i_on_x = pb.map(iname);
    ambient_i = &pb.map(*ambient);
  }
  RetractionResult res = uniformize(x, *ambient_i, pb.map(rname), x0, i_on_x, o.pipeline());
  const Matrix dg = germ_derivative(res.g.components);
  b.outputs["variety"] = xname;
  b.outputs["i"] = iname;
  b.outputs["r"] = rname;
  b.outputs["ambient_i"] = ambient ? json(*ambient) : json(nullptr);
  b.outputs["point"] = point_json(x0);
  b.outputs["composite"] = fracs_json(res.composite);
  b.outputs["g"] = germ_outputs(res.g);
  b.outputs["derivative_is_tangent_projection"] = is_tangent_projection(dg, x, x0);
  b.outputs["h_v"] = to_string(res.h_v);
  b.outputs["h_v_at_point"] = rat_json(res.h_v.evaluate(x0));
  b.outputs["h_u"] = to_string(res.h_u);
  b.outputs["h_u_at_point"] = rat_json(res.h_u.evaluate(x0));
  b.outputs["pullback"] = frac_json(res.pullback.num, res.pullback.den);
  append(b.certificates, res.g.certs);
  append(b.certificates, res.identity_certs);
}

using Runner = std::function<void(const Problem&, const Args&, const TaskOptions&, Bundle&)>;

Runner runner_for(const std::string& task) {
  if (task == "gb") return run_gb;
  if (task == "member") return run_member;
  if (task == "dim") return run_dim;
  if (task == "smooth") return run_smooth;
  if (task == "genpos") return run_genpos;
  if (task == "sigma") return run_sigma;
  if (task == "lift") return run_lift;
  if (task == "retract") return run_retract;
  if (task == "uniformize") return run_uniformize;
  fail(ErrorKind::PreconditionViolated, "no problem task named " + task);
}

}  // namespace

Bundle run_task(const Problem& problem, const std::string& task,
                const std::vector<std::string>& args, const TaskOptions& options) {
  const Runner run = runner_for(task);
  std::vector<std::string> effective = args;
  if (effective.empty() && problem.task == task) effective = problem.args;

  Bundle b;
  b.task = task;
  b.args = effective;
  b.outputs["ring"] = problem.ring->names();
  const auto start = std::chrono::steady_clock::now();
  run(problem, Args(problem, effective), options, b);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  b.metadata["seed"] = options.seed;
  b.metadata["limits"] = {{"max_tries", options.max_tries},
                          {"max_lift_degree", options.max_lift_degree},
                          {"max_jet_order", options.max_jet_order},
                          {"max_pairs", options.limits.max_pairs},
                          {"max_reduction_steps", options.limits.max_reduction_steps},
                          {"max_basis_size", options.limits.max_basis_size}};
  b.metadata["order"] = options.order ? json(*options.order) : json(nullptr);
  if (options.timings) {
    b.metadata["timings"] = {
        {"total_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  return b;
}

}  // namespace urr
