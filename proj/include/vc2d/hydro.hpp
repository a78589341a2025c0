#pragma once

#include <span>
#include <vector>

#include "vc2d/calc2d.hpp"
#include "vc2d/field.hpp"
#include "vc2d/geometry.hpp"
#include "vc2d/quadrature.hpp"

namespace vc2d {

// A 2D flow: velocity field, the (star-shaped) region on which potential
// reconstructions are trusted, and the base point O used as the zero of
// every reconstructed potential. O must lie inside the region.
struct FlowField {
  VectorField2 v;
  Region2 domain_hint;
  Point2 base_point;
};

struct IncompressibilityReport {
  bool ok = false;
  double max_abs_div = 0.0;
};

// deterministic per_axis x per_axis grid over the region bounds, filtered to
// points inside the region; used to sample the reconstruction preconditions
std::vector<Point2> region_grid_samples(const Region2& region, int per_axis = 7);

// max |div v| over the samples, compared against tol
IncompressibilityReport check_incompressible(const FlowField& flow,
                                             std::span<const Point2> samples, double tol);

// curl3 of the velocity at a point. This is the scalar vorticity; note that
// conventions relating it to the angular velocity of a small floating body
// differ by constant factors, so only curl3 v itself is returned.
double vorticity(const FlowField& flow, Point2 p);

enum class ReconstructionPath { Segment, AxisLegs };

// Raw path integrals used by the reconstructions, without precondition or
// consistency checks: the stream kernel integrates v_y dx - v_x dy, the
// potential kernel v_x dx + v_y dy, from the base point to p either along
// the straight segment or along the two axis-parallel legs (x first).
double stream_function_raw(const FlowField& flow, Point2 p, ReconstructionPath path,
                           QuadratureSpec q = {});
double potential_raw(const FlowField& flow, Point2 p, ReconstructionPath path,
                     QuadratureSpec q = {});

// Stream function f with v = ham f and f(base) = 0, built by integrating
// v_y dx - v_x dy along the straight segment from the base point.
// Construction checks incompressibility on the domain grid (PreconditionError
// on failure); every evaluation cross-checks the segment value against the
// axis-leg path and throws PathDependenceError if they differ by more than
// 1e-6. First partials come from central differences at h = 1e-6, so the
// returned field carries one derivative level.
ScalarField2 reconstruct_stream_function(const FlowField& flow, QuadratureSpec q = {},
                                         double div_tol = 1e-10);

// Velocity potential g with v = grad g and g(base) = 0; same contract with
// the vorticity in place of the divergence.
ScalarField2 reconstruct_potential(const FlowField& flow, QuadratureSpec q = {},
                                   double curl_tol = 1e-10);

// Fixed-step classical Runge-Kutta trace of r' = v(r). Stops early, with
// `truncated` set, when the next point would leave domain_hint or the
// velocity is undefined.
struct Streamline {
  std::vector<Point2> points;
  double dt = 0.0;
  bool truncated = false;
  const char* method = "rk4";
};
Streamline trace_streamline(const FlowField& flow, Point2 start, double dt, int steps);

// net area flux of the fluid per unit time through the path, i.e. the
// integral of v_y dx - v_x dy; equals f(end) - f(start) for any stream
// function f of an incompressible flow
double area_flux(const FlowField& flow, const Curve2& path, QuadratureSpec q = {});

// complex derivative h'(z) = v_y + i v_x of the complex potential
// h = f + i g; a pointwise value, meaningful as a derivative only where the
// flow is both incompressible and vorticity-free
struct Complex {
  double re = 0.0;
  double im = 0.0;
};
Complex complex_derivative(const FlowField& flow, Point2 p);

// Cauchy-Riemann residuals for a candidate pair (f, g):
//   residual_x = max |(-df/dy) - dg/dx|,  residual_y = max |df/dx - dg/dy|.
// When both residuals pass and the fields carry full jets, the harmonic
// conjugate property (laplacian f = laplacian g = 0) is asserted as well;
// fields with only one derivative level (reconstructions) skip that part.
struct CauchyRiemannReport {
  double residual_x = 0.0;
  double residual_y = 0.0;
  bool harmonic_checked = false;
  double max_laplacian_f = 0.0;
  double max_laplacian_g = 0.0;
  bool pass = false;
};
CauchyRiemannReport check_cauchy_riemann(const ScalarField2& f, const ScalarField2& g,
                                         std::span<const Point2> samples, double tol);

}  // namespace vc2d
