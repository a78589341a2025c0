#include "vc2d/hydro.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vc2d/errors.hpp"

namespace vc2d {
namespace {

constexpr double kPathTol = 1e-6;  // segment vs axis-leg disagreement limit
constexpr double kFdStep = 1e-6;   // central-difference step for reconstructed fields

// the 1-form whose integral from O to P gives the stream function:
// df = v_y dx - v_x dy
OneForm2 stream_kernel(const VectorField2& v) { return {v.y, negate(v.x)}; }

// dg = v_x dx + v_y dy
OneForm2 potential_kernel(const VectorField2& v) { return flat(v); }

double path_integral(const OneForm2& omega, Point2 from, Point2 to, ReconstructionPath path,
                     QuadratureSpec q) {
  if (from.x == to.x && from.y == to.y) return 0.0;
  if (path == ReconstructionPath::Segment)
    return line_integral(omega, Curve2::segment(from, to), q);
  const Point2 corner{to.x, from.y};
  double total = 0.0;
  if (corner.x != from.x || corner.y != from.y)
    total += line_integral(omega, Curve2::segment(from, corner), q);
  if (to.x != corner.x || to.y != corner.y)
    total += line_integral(omega, Curve2::segment(corner, to), q);
  return total;
}

// shared implementation of both reconstructions
ScalarField2 reconstruct(const FlowField& flow, const OneForm2& omega, QuadratureSpec q,
                         const char* what) {
  const Point2 base = flow.base_point;
  auto value_fn = [omega, base, q, what](Point2 p) {
    const double seg = path_integral(omega, base, p, ReconstructionPath::Segment, q);
    const double legs = path_integral(omega, base, p, ReconstructionPath::AxisLegs, q);
    if (std::abs(seg - legs) > kPathTol)
      throw PathDependenceError(std::string(what) +
                                ": segment and axis-leg paths disagree by " +
                                std::to_string(std::abs(seg - legs)));
    return seg;
  };
  auto jet_fn = [value_fn](Point2 p) {
    Jet2 j;
    j.v = value_fn(p);
    j.d[0] = (value_fn({p.x + kFdStep, p.y}) - value_fn({p.x - kFdStep, p.y})) / (2.0 * kFdStep);
    j.d[1] = (value_fn({p.x, p.y + kFdStep}) - value_fn({p.x, p.y - kFdStep})) / (2.0 * kFdStep);
    return j;
  };
  return {std::move(jet_fn), std::move(value_fn), 1};
}

}  // namespace

std::vector<Point2> region_grid_samples(const Region2& region, int per_axis) {
  if (per_axis < 2) throw std::invalid_argument("need at least a 2x2 sample grid");
  const Region2::Bounds b = region.bounds();
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(per_axis) * per_axis);
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      // offset half a cell from the bounds so disc/polygon edges are avoided
      const Point2 p{b.x0 + (b.x1 - b.x0) * (i + 0.5) / per_axis,
                     b.y0 + (b.y1 - b.y0) * (j + 0.5) / per_axis};
      if (region.contains(p)) pts.push_back(p);
    }
  }
  return pts;
}

IncompressibilityReport check_incompressible(const FlowField& flow,
                                             std::span<const Point2> samples, double tol) {
  const ScalarField2 dv = div(flow.v);
  IncompressibilityReport r;
  for (const Point2& p : samples) r.max_abs_div = std::max(r.max_abs_div, std::abs(dv.value(p)));
  r.ok = r.max_abs_div <= tol;
  return r;
}

double vorticity(const FlowField& flow, Point2 p) { return curl3(flow.v).value(p); }

double stream_function_raw(const FlowField& flow, Point2 p, ReconstructionPath path,
                           QuadratureSpec q) {
  return path_integral(stream_kernel(flow.v), flow.base_point, p, path, q);
}

double potential_raw(const FlowField& flow, Point2 p, ReconstructionPath path,
                     QuadratureSpec q) {
  return path_integral(potential_kernel(flow.v), flow.base_point, p, path, q);
}

ScalarField2 reconstruct_stream_function(const FlowField& flow, QuadratureSpec q,
                                         double div_tol) {
  if (!flow.domain_hint.contains(flow.base_point))
    throw std::invalid_argument("base point must lie inside the domain");
  const std::vector<Point2> samples = region_grid_samples(flow.domain_hint);
  const IncompressibilityReport rep = check_incompressible(flow, samples, div_tol);
  if (!rep.ok)
    throw PreconditionError("stream function needs a divergence-free field; max |div v| = " +
                            std::to_string(rep.max_abs_div));
  return reconstruct(flow, stream_kernel(flow.v), q, "stream function");
}

ScalarField2 reconstruct_potential(const FlowField& flow, QuadratureSpec q, double curl_tol) {
  if (!flow.domain_hint.contains(flow.base_point))
    throw std::invalid_argument("base point must lie inside the domain");
  const ScalarField2 w = curl3(flow.v);
  double max_abs = 0.0;
  for (const Point2& p : region_grid_samples(flow.domain_hint))
    max_abs = std::max(max_abs, std::abs(w.value(p)));
  if (max_abs > curl_tol)
    throw PreconditionError("potential needs a vorticity-free field; max |curl3 v| = " +
                            std::to_string(max_abs));
  return reconstruct(flow, potential_kernel(flow.v), q, "potential");
}

Streamline trace_streamline(const FlowField& flow, Point2 start, double dt, int steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("trace needs dt > 0");
  if (steps < 0) throw std::invalid_argument("trace needs steps >= 0");
  Streamline s;
  s.dt = dt;
  s.points.reserve(static_cast<std::size_t>(steps) + 1);
  s.points.push_back(start);
  if (!flow.domain_hint.contains(start)) {
    s.truncated = true;
    return s;
  }
  const ScalarField2 vx = flow.v.x, vy = flow.v.y;
  auto velocity = [&](Point2 p) { return Point2{vx.value(p), vy.value(p)}; };
  Point2 r = start;
  for (int k = 0; k < steps; ++k) {
    Point2 next;
    try {
      const Point2 k1 = velocity(r);
      const Point2 k2 = velocity({r.x + 0.5 * dt * k1.x, r.y + 0.5 * dt * k1.y});
      const Point2 k3 = velocity({r.x + 0.5 * dt * k2.x, r.y + 0.5 * dt * k2.y});
      const Point2 k4 = velocity({r.x + dt * k3.x, r.y + dt * k3.y});
      next = {r.x + dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
              r.y + dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
    } catch (const DomainError&) {
      s.truncated = true;
      break;
    }
    if (!flow.domain_hint.contains(next)) {
      s.truncated = true;
      break;
    }
    s.points.push_back(next);
    r = next;
  }
  return s;
}

double area_flux(const FlowField& flow, const Curve2& path, QuadratureSpec q) {
  return line_integral(stream_kernel(flow.v), path, q);
}

Complex complex_derivative(const FlowField& flow, Point2 p) {
  return {flow.v.y.value(p), flow.v.x.value(p)};
}

CauchyRiemannReport check_cauchy_riemann(const ScalarField2& f, const ScalarField2& g,
                                         std::span<const Point2> samples, double tol) {
  CauchyRiemannReport r;
  for (const Point2& p : samples) {
    const Jet2 jf = f.jet(p);
    const Jet2 jg = g.jet(p);
    r.residual_x = std::max(r.residual_x, std::abs(-jf.dy() - jg.dx()));
    r.residual_y = std::max(r.residual_y, std::abs(jf.dx() - jg.dy()));
  }
  r.pass = r.residual_x <= tol && r.residual_y <= tol;
  if (r.pass && f.order() >= 2 && g.order() >= 2) {
    r.harmonic_checked = true;
    const ScalarField2 lf = laplacian(f);
    const ScalarField2 lg = laplacian(g);
    for (const Point2& p : samples) {
      r.max_laplacian_f = std::max(r.max_laplacian_f, std::abs(lf.value(p)));
      r.max_laplacian_g = std::max(r.max_laplacian_g, std::abs(lg.value(p)));
    }
    r.pass = r.max_laplacian_f <= tol && r.max_laplacian_g <= tol;
  }
  return r;
}

}  // namespace vc2d
