// Command-line front end: expression fields in, JSON (or CSV for traces and
// grids) out. Exit codes: 0 success, 1 a verification failed, 2 expression
// parse error, 3 domain error, 4 bad region (non-simple polygon and friends),
// 5 reconstruction precondition failed, 6 path-dependence check failed.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vc2d/calc2d.hpp"
#include "vc2d/errors.hpp"
#include "vc2d/hydro.hpp"
#include "vc2d/quadrature.hpp"
#include "vc2d/rng.hpp"

using Json = nlohmann::ordered_json;
using namespace vc2d;

namespace {

ScalarField2 parse_scalar(const std::string& src) {
  return ScalarField2::from_expr(FieldExpr::parse(src, {"x", "y"}));
}

// "Ax;Ay" with a single semicolon separator
std::pair<std::string, std::string> split_pair(const std::string& src) {
  const std::size_t sep = src.find(';');
  if (sep == std::string::npos || src.find(';', sep + 1) != std::string::npos)
    throw ParseError("expected two expressions separated by one ';'",
                     sep == std::string::npos ? src.size() : sep);
  return {src.substr(0, sep), src.substr(sep + 1)};
}

VectorField2 parse_vector(const std::string& src) {
  const auto [ax, ay] = split_pair(src);
  return VectorField2::from_exprs(FieldExpr::parse(ax, {"x", "y"}),
                                  FieldExpr::parse(ay, {"x", "y"}));
}

// region spec: "rect x0 x1 y0 y1" | "disc cx cy r" | "poly x1 y1 x2 y2 ..."
Region2 parse_region(const std::string& spec) {
  std::istringstream in(spec);
  std::string kind;
  in >> kind;
  std::vector<double> nums;
  double v;
  while (in >> v) nums.push_back(v);
  if (!in.eof()) throw PolygonError("region spec has non-numeric arguments: " + spec);
  try {
    if (kind == "rect") {
      if (nums.size() != 4) throw PolygonError("rect needs 4 numbers: x0 x1 y0 y1");
      return Region2::rectangle(nums[0], nums[1], nums[2], nums[3]);
    }
    if (kind == "disc") {
      if (nums.size() != 3) throw PolygonError("disc needs 3 numbers: cx cy r");
      return Region2::disc({nums[0], nums[1]}, nums[2]);
    }
    if (kind == "poly") {
      if (nums.size() < 6 || nums.size() % 2 != 0)
        throw PolygonError("poly needs an even number (>= 6) of coordinates");
      std::vector<Point2> verts;
      for (std::size_t i = 0; i < nums.size(); i += 2) verts.push_back({nums[i], nums[i + 1]});
      return Region2::polygon(std::move(verts));
    }
  } catch (const std::invalid_argument& e) {
    throw PolygonError(e.what());
  }
  throw PolygonError("unknown region kind '" + kind + "' (rect|disc|poly)");
}

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

Json report_doc(const std::string& command, Json inputs, Json results, Json residuals,
                bool pass) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  doc["residuals"] = std::move(residuals);
  doc["pass"] = pass;
  return doc;
}

std::vector<Point2> seeded_points(std::uint64_t seed, int count, double lo, double hi) {
  SplitMix64 rng(seed);
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pts.push_back(rng.point(lo, hi));
  return pts;
}

// ---------------------------------------------------------------------------
// subcommand option blocks
// ---------------------------------------------------------------------------

struct EvalOpts {
  std::string field;
  std::string op;
  std::vector<double> at;
};

struct IdentityOpts {
  std::string field;
  int points = 100;
  std::uint64_t seed = 0;
};

struct GreenOpts {
  std::string field;
  std::string region;
  int panels = 32;
  int order = 8;
  bool flux = false;
};

struct CurveOpts {
  std::vector<double> segment;  // x0 y0 x1 y1
  std::string curve;            // "x(t);y(t)"
  double t0 = 0.0;
  double t1 = 1.0;
  bool closed = false;
};

struct GradThmOpts {
  std::string field;
  CurveOpts curve;
  int panels = 32;
  int order = 8;
  double tol = 1e-8;
};

struct StreamOpts {
  std::string field;
  std::vector<double> base{0.0, 0.0};
  std::vector<double> at;
  std::vector<double> grid;  // x0 x1 y0 y1 n
  std::string domain = "rect -2 2 -2 2";
  double tol = 1e-10;
  int panels = 32;
  int order = 8;
  std::string format = "json";
};

struct TraceOpts {
  std::string field;
  std::vector<double> start;
  double dt = 1e-3;
  int steps = 1000;
  std::string domain = "rect -2 2 -2 2";
  std::vector<double> base;
  double div_tol = 1e-10;
  std::string format = "json";
};

struct FluxOpts {
  std::string field;
  CurveOpts curve;
  int panels = 32;
  int order = 8;
};

struct CrOpts {
  std::string stream;
  std::string potential;
  int points = 100;
  std::uint64_t seed = 0;
  double tol = 1e-8;
};

Curve2 make_curve(const CurveOpts& o) {
  if (!o.segment.empty()) {
    if (o.segment.size() != 4) throw std::invalid_argument("--segment needs x0 y0 x1 y1");
    return Curve2::segment({o.segment[0], o.segment[1]}, {o.segment[2], o.segment[3]});
  }
  if (o.curve.empty()) throw std::invalid_argument("give either --segment or --curve");
  const auto [xs, ys] = split_pair(o.curve);
  return Curve2(FieldExpr::parse(xs, {"t"}), FieldExpr::parse(ys, {"t"}), o.t0, o.t1, o.closed);
}

void add_curve_options(CLI::App* cmd, CurveOpts& o) {
  cmd->add_option("--segment", o.segment, "straight path: x0 y0 x1 y1")->expected(4);
  cmd->add_option("--curve", o.curve, "parametrized path \"x(t);y(t)\"");
  cmd->add_option("--t0", o.t0, "curve parameter start");
  cmd->add_option("--t1", o.t1, "curve parameter end");
  cmd->add_flag("--closed", o.closed, "assert the curve is closed");
}

// ---------------------------------------------------------------------------
// subcommand implementations
// ---------------------------------------------------------------------------

int run_eval(const EvalOpts& o) {
  const Point2 p{o.at[0], o.at[1]};
  Json results;
  if (o.op == "grad" || o.op == "ham") {
    const VectorField2 v =
        o.op == "grad" ? grad(parse_scalar(o.field)) : ham(parse_scalar(o.field));
    results["value"] = {v.x.value(p), v.y.value(p)};
  } else if (o.op == "laplacian") {
    results["value"] = laplacian(parse_scalar(o.field)).value(p);
  } else if (o.op == "curl3" || o.op == "div") {
    const VectorField2 a = parse_vector(o.field);
    results["value"] = (o.op == "curl3" ? curl3(a) : div(a)).value(p);
  } else if (o.op == "perp") {
    const VectorField2 v = perp(parse_vector(o.field));
    results["value"] = {v.x.value(p), v.y.value(p)};
  } else {
    throw std::invalid_argument("unknown --op '" + o.op + "'");
  }
  emit(report_doc("eval", {{"field", o.field}, {"op", o.op}, {"at", {p.x, p.y}}},
                  std::move(results), Json::object(), true));
  return 0;
}

int run_identities(const IdentityOpts& o) {
  const ScalarField2 f = parse_scalar(o.field);
  const ScalarField2 lap = laplacian(f);
  const ScalarField2 curl_grad = curl3(grad(f));
  const ScalarField2 div_ham = div(ham(f));
  const ScalarField2 lap_grad_route = div(grad(f));
  const ScalarField2 lap_ham_route = curl3(ham(f));
  const VectorField2 a = grad(f);
  const VectorField2 pp = perp(perp(a));
  const OneForm2 alpha = d(f);
  const OneForm2 star2 = hodge(hodge(alpha));

  double r_curl_grad = 0, r_div_ham = 0, r_lap_grad = 0, r_lap_ham = 0, r_perp = 0, r_star = 0;
  for (const Point2& p : seeded_points(o.seed, o.points, -2.0, 2.0)) {
    r_curl_grad = std::max(r_curl_grad, std::abs(curl_grad.value(p)));
    r_div_ham = std::max(r_div_ham, std::abs(div_ham.value(p)));
    const double l = lap.value(p);
    r_lap_grad = std::max(r_lap_grad, std::abs(lap_grad_route.value(p) - l));
    r_lap_ham = std::max(r_lap_ham, std::abs(lap_ham_route.value(p) - l));
    r_perp = std::max({r_perp, std::abs(pp.x.value(p) + a.x.value(p)),
                       std::abs(pp.y.value(p) + a.y.value(p))});
    r_star = std::max({r_star, std::abs(star2.p.value(p) + alpha.p.value(p)),
                       std::abs(star2.q.value(p) + alpha.q.value(p))});
  }
  Json residuals = {{"curl3_grad", r_curl_grad},
                    {"div_ham", r_div_ham},
                    {"laplacian_grad_route", r_lap_grad},
                    {"laplacian_ham_route", r_lap_ham},
                    {"perp_perp", r_perp},
                    {"hodge_square", r_star}};
  const double tol = 1e-10;
  bool pass = true;
  for (double r : {r_curl_grad, r_div_ham, r_lap_grad, r_lap_ham, r_perp, r_star})
    pass = pass && r <= tol;
  emit(report_doc("identities",
                  {{"field", o.field}, {"points", o.points}, {"seed", o.seed}, {"tol", tol}},
                  Json::object(), std::move(residuals), pass));
  return pass ? 0 : 1;
}

int run_green(const GreenOpts& o) {
  const VectorField2 a = parse_vector(o.field);
  const Region2 region = parse_region(o.region);
  const QuadratureSpec q{o.panels, o.order};
  Json results;
  double residual = 0.0;
  // results carry both the descriptive names and the generic lhs/rhs record
  if (o.flux) {
    const FluxReport r = verify_green_flux(a, region, q);
    results = {{"lhs", r.div_term}, {"rhs", r.flux}, {"flux", r.flux},
               {"div_term", r.div_term}};
    residual = r.residual;
  } else {
    const GreenReport r = verify_green(a, region, q);
    results = {{"lhs", r.area_term}, {"rhs", r.circulation}, {"circulation", r.circulation},
               {"area_term", r.area_term}};
    residual = r.residual;
  }
  const bool pass = residual <= 1e-6;
  emit(report_doc("green",
                  {{"field", o.field},
                   {"region", o.region},
                   {"panels", o.panels},
                   {"order", o.order},
                   {"flux", o.flux}},
                  std::move(results), {{"residual", residual}}, pass));
  return pass ? 0 : 1;
}

int run_gradient_theorem(const GradThmOpts& o) {
  const ScalarField2 f = parse_scalar(o.field);
  const Curve2 c = make_curve(o.curve);
  const GradientReport r = verify_gradient_theorem(f, c, {o.panels, o.order});
  const bool pass = r.residual <= o.tol && r.starred_residual <= o.tol && r.twin_gap <= o.tol;
  emit(report_doc(
      "gradient-theorem",
      {{"field", o.field}, {"panels", o.panels}, {"order", o.order}, {"tol", o.tol}},
      {{"lhs", r.lhs}, {"rhs", r.rhs}, {"starred_lhs", r.starred_lhs},
       {"starred_rhs", r.starred_rhs}},
      {{"residual", r.residual}, {"starred_residual", r.starred_residual},
       {"twin_gap", r.twin_gap}},
      pass));
  return pass ? 0 : 1;
}

// shared by `stream` and `potential`
int run_reconstruction(const StreamOpts& o, bool stream) {
  const FlowField flow{parse_vector(o.field), parse_region(o.domain), {o.base[0], o.base[1]}};
  const QuadratureSpec q{o.panels, o.order};
  const ScalarField2 f = stream ? reconstruct_stream_function(flow, q, o.tol)
                                : reconstruct_potential(flow, q, o.tol);
  const char* name = stream ? "stream" : "potential";
  Json inputs = {{"field", o.field},
                 {"base", {o.base[0], o.base[1]}},
                 {"domain", o.domain},
                 {"tol", o.tol}};
  if (!o.at.empty()) {
    const double value = f.value({o.at[0], o.at[1]});
    inputs["at"] = {o.at[0], o.at[1]};
    emit(report_doc(name, std::move(inputs), {{"value", value}}, Json::object(), true));
    return 0;
  }
  if (o.grid.size() != 5)
    throw std::invalid_argument("give either --at x y or --grid x0 x1 y0 y1 n");
  const int n = static_cast<int>(o.grid[4]);
  if (n < 1) throw std::invalid_argument("--grid needs n >= 1");
  inputs["grid"] = {o.grid[0], o.grid[1], o.grid[2], o.grid[3], n};
  auto coord = [n](double lo, double hi, int i) {
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1);
  };
  if (o.format == "csv") {
    std::cout << "x,y,f\n";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Point2 p{coord(o.grid[0], o.grid[1], i), coord(o.grid[2], o.grid[3], j)};
        std::cout << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(f.value(p)) << '\n';
      }
    return 0;
  }
  Json rows = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Point2 p{coord(o.grid[0], o.grid[1], i), coord(o.grid[2], o.grid[3], j)};
      rows.push_back({p.x, p.y, f.value(p)});
    }
  emit(report_doc(name, std::move(inputs), {{"rows", std::move(rows)}}, Json::object(), true));
  return 0;
}

int run_trace(const TraceOpts& o) {
  const FlowField flow{parse_vector(o.field), parse_region(o.domain), {0, 0}};
  std::optional<ScalarField2> f;
  if (!o.base.empty()) {
    const FlowField based{flow.v, flow.domain_hint, {o.base[0], o.base[1]}};
    f = reconstruct_stream_function(based, {}, o.div_tol);
  }
  const Streamline line = trace_streamline(flow, {o.start[0], o.start[1]}, o.dt, o.steps);
  if (o.format == "csv") {
    std::cout << "# trace method=" << line.method
              << " truncated=" << (line.truncated ? "true" : "false")
              << " points=" << line.points.size() << " dt=" << fmt(o.dt) << '\n';
    std::cout << (f ? "t,x,y,f\n" : "t,x,y\n");
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      const Point2& p = line.points[i];
      std::cout << fmt(i * o.dt) << ',' << fmt(p.x) << ',' << fmt(p.y);
      if (f) std::cout << ',' << fmt(f->value(p));
      std::cout << '\n';
    }
    return 0;
  }
  Json points = Json::array();
  for (std::size_t i = 0; i < line.points.size(); ++i) {
    const Point2& p = line.points[i];
    if (f)
      points.push_back({i * o.dt, p.x, p.y, f->value(p)});
    else
      points.push_back({i * o.dt, p.x, p.y});
  }
  emit(report_doc("trace",
                  {{"field", o.field},
                   {"start", {o.start[0], o.start[1]}},
                   {"dt", o.dt},
                   {"steps", o.steps},
                   {"domain", o.domain}},
                  {{"method", line.method},
                   {"truncated", line.truncated},
                   {"points", std::move(points)}},
                  Json::object(), true));
  return 0;
}

int run_flux(const FluxOpts& o) {
  const FlowField flow{parse_vector(o.field), Region2::rectangle(-1, 1, -1, 1), {0, 0}};
  const Curve2 path = make_curve(o.curve);
  const double value = area_flux(flow, path, {o.panels, o.order});
  emit(report_doc("flux", {{"field", o.field}, {"panels", o.panels}, {"order", o.order}},
                  {{"flux", value}}, Json::object(), true));
  return 0;
}

int run_cr(const CrOpts& o) {
  const ScalarField2 f = parse_scalar(o.stream);
  const ScalarField2 g = parse_scalar(o.potential);
  const std::vector<Point2> pts = seeded_points(o.seed, o.points, -2.0, 2.0);
  const CauchyRiemannReport r = check_cauchy_riemann(f, g, pts, o.tol);
  Json residuals = {{"residual_x", r.residual_x}, {"residual_y", r.residual_y}};
  if (r.harmonic_checked) {
    residuals["max_laplacian_f"] = r.max_laplacian_f;
    residuals["max_laplacian_g"] = r.max_laplacian_g;
  }
  emit(report_doc("cr",
                  {{"stream", o.stream},
                   {"potential", o.potential},
                   {"points", o.points},
                   {"seed", o.seed},
                   {"tol", o.tol}},
                  {{"harmonic_checked", r.harmonic_checked}}, std::move(residuals), r.pass));
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D vector calculus toolkit: differential operators, integral "
               "theorem checks, stream functions and traces"};
  app.require_subcommand(1);

  EvalOpts eval_opts;
  CLI::App* eval_cmd = app.add_subcommand("eval", "apply an operator to a field at a point");
  eval_cmd->add_option("--field", eval_opts.field, "scalar expr, or \"Ax;Ay\" for vector ops")
      ->required();
  eval_cmd->add_option("--op", eval_opts.op, "grad|curl3|ham|div|laplacian|perp")->required();
  eval_cmd->add_option("--at", eval_opts.at, "evaluation point x y")->expected(2)->required();

  IdentityOpts id_opts;
  CLI::App* id_cmd = app.add_subcommand("identities", "operator identity suite at random points");
  id_cmd->add_option("--field", id_opts.field, "scalar expression")->required();
  id_cmd->add_option("--points", id_opts.points, "sample count");
  id_cmd->add_option("--seed", id_opts.seed, "random seed");

  GreenOpts green_opts;
  CLI::App* green_cmd = app.add_subcommand("green", "Green's theorem on a region");
  green_cmd->add_option("--field", green_opts.field, "vector field \"Ax;Ay\"")->required();
  green_cmd
      ->add_option("--region", green_opts.region, "rect x0 x1 y0 y1 | disc cx cy r | poly ...")
      ->required();
  green_cmd->add_option("--panels", green_opts.panels, "quadrature panels");
  green_cmd->add_option("--order", green_opts.order, "Gauss order");
  green_cmd->add_flag("--flux", green_opts.flux, "check the flux/divergence form");

  GradThmOpts grad_opts;
  CLI::App* grad_cmd = app.add_subcommand("gradient-theorem", "gradient theorem along a curve");
  grad_cmd->add_option("--field", grad_opts.field, "scalar expression")->required();
  add_curve_options(grad_cmd, grad_opts.curve);
  grad_cmd->add_option("--panels", grad_opts.panels, "quadrature panels");
  grad_cmd->add_option("--order", grad_opts.order, "Gauss order");
  grad_cmd->add_option("--tol", grad_opts.tol, "pass tolerance");

  StreamOpts stream_opts;
  CLI::App* stream_cmd = app.add_subcommand("stream", "reconstruct the stream function");
  stream_cmd->add_option("--field", stream_opts.field, "velocity \"vx;vy\"")->required();
  stream_cmd->add_option("--base", stream_opts.base, "base point x0 y0")->expected(2);
  stream_cmd->add_option("--at", stream_opts.at, "evaluate at x y")->expected(2);
  stream_cmd->add_option("--grid", stream_opts.grid, "grid x0 x1 y0 y1 n")->expected(5);
  stream_cmd->add_option("--domain", stream_opts.domain, "region spec for the precondition");
  stream_cmd->add_option("--div-tol", stream_opts.tol, "incompressibility tolerance");
  stream_cmd->add_option("--panels", stream_opts.panels, "quadrature panels");
  stream_cmd->add_option("--order", stream_opts.order, "Gauss order");
  stream_cmd->add_option("--format", stream_opts.format, "json|csv");

  StreamOpts pot_opts;
  CLI::App* pot_cmd = app.add_subcommand("potential", "reconstruct the velocity potential");
  pot_cmd->add_option("--field", pot_opts.field, "velocity \"vx;vy\"")->required();
  pot_cmd->add_option("--base", pot_opts.base, "base point x0 y0")->expected(2);
  pot_cmd->add_option("--at", pot_opts.at, "evaluate at x y")->expected(2);
  pot_cmd->add_option("--grid", pot_opts.grid, "grid x0 x1 y0 y1 n")->expected(5);
  pot_cmd->add_option("--domain", pot_opts.domain, "region spec for the precondition");
  pot_cmd->add_option("--curl-tol", pot_opts.tol, "vorticity tolerance");
  pot_cmd->add_option("--panels", pot_opts.panels, "quadrature panels");
  pot_cmd->add_option("--order", pot_opts.order, "Gauss order");
  pot_cmd->add_option("--format", pot_opts.format, "json|csv");

  TraceOpts trace_opts;
  CLI::App* trace_cmd = app.add_subcommand("trace", "integrate a streamline with RK4");
  trace_cmd->add_option("--field", trace_opts.field, "velocity \"vx;vy\"")->required();
  trace_cmd->add_option("--start", trace_opts.start, "start point x y")->expected(2)->required();
  trace_cmd->add_option("--dt", trace_opts.dt, "time step");
  trace_cmd->add_option("--steps", trace_opts.steps, "step count");
  trace_cmd->add_option("--domain", trace_opts.domain, "bounding region; leaving it truncates");
  trace_cmd->add_option("--base", trace_opts.base, "stream-function base point (adds f column)")
      ->expected(2);
  trace_cmd->add_option("--div-tol", trace_opts.div_tol, "incompressibility tolerance for f");
  trace_cmd->add_option("--format", trace_opts.format, "json|csv");

  FluxOpts flux_opts;
  CLI::App* flux_cmd = app.add_subcommand("flux", "net area flux through a path");
  flux_cmd->add_option("--field", flux_opts.field, "velocity \"vx;vy\"")->required();
  add_curve_options(flux_cmd, flux_opts.curve);
  flux_cmd->add_option("--panels", flux_opts.panels, "quadrature panels");
  flux_cmd->add_option("--order", flux_opts.order, "Gauss order");

  CrOpts cr_opts;
  CLI::App* cr_cmd = app.add_subcommand("cr", "Cauchy-Riemann check for a stream/potential pair");
  cr_cmd->add_option("--stream", cr_opts.stream, "stream function expression")->required();
  cr_cmd->add_option("--potential", cr_opts.potential, "potential expression")->required();
  cr_cmd->add_option("--points", cr_opts.points, "sample count");
  cr_cmd->add_option("--seed", cr_opts.seed, "random seed");
  cr_cmd->add_option("--tol", cr_opts.tol, "pass tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(eval_opts);
    if (id_cmd->parsed()) return run_identities(id_opts);
    if (green_cmd->parsed()) return run_green(green_opts);
    if (grad_cmd->parsed()) return run_gradient_theorem(grad_opts);
    if (stream_cmd->parsed()) return run_reconstruction(stream_opts, true);
    if (pot_cmd->parsed()) return run_reconstruction(pot_opts, false);
    if (trace_cmd->parsed()) return run_trace(trace_opts);
    if (flux_cmd->parsed()) return run_flux(flux_opts);
    if (cr_cmd->parsed()) return run_cr(cr_opts);
  } catch (const ParseError& e) {
    std::cerr << "vc2d: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "vc2d: " << e.what() << '\n';
    return 3;
  } catch (const PolygonError& e) {
    std::cerr << "vc2d: " << e.what() << '\n';
    return 4;
  } catch (const PreconditionError& e) {
    std::cerr << "vc2d: " << e.what() << '\n';
    return 5;
  } catch (const PathDependenceError& e) {
    std::cerr << "vc2d: " << e.what() << '\n';
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "vc2d: " << e.what() << '\n';
    return 70;
  }
  return 0;
}
