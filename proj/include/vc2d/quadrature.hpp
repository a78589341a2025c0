#pragma once

#include <vector>

#include "vc2d/calc2d.hpp"
#include "vc2d/field.hpp"
#include "vc2d/geometry.hpp"

namespace vc2d {

// Composite quadrature controls: `panels` subdivisions of each parameter
// interval (or axis), `order` Gauss-Legendre points per panel.
struct QuadratureSpec {
  int panels = 32;
  int order = 8;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// nodes and weights for 1 <= order <= 16, computed once and cached
const GaussRule& gauss_rule(int order);

// integral of p dx + q dy along the curve, i.e. of (p x' + q y') dt
double line_integral(const OneForm2& alpha, const Curve2& c, QuadratureSpec q = {});

// integral of g dS over the region: tensor-product panels on a rectangle,
// a polar map with Jacobian r on a disc, ear-clipping triangulation with a
// symmetric degree-5 rule (panels^2 uniform subtriangles each) on a polygon
double area_integral(const TwoForm2& beta, const Region2& s, QuadratureSpec q = {});

// value at doubled panel count plus the conservative error estimate
// |result(panels) - result(2 panels)|
struct IntegralEstimate {
  double value;
  double error;
};
IntegralEstimate line_integral_estimate(const OneForm2& alpha, const Curve2& c,
                                        QuadratureSpec q = {});
IntegralEstimate area_integral_estimate(const TwoForm2& beta, const Region2& s,
                                        QuadratureSpec q = {});

// Gradient theorem along a curve c from A to B, checked both ways:
//   primal:   integral of grad f . dr        vs  f(B) - f(A)
//   starred:  integral of *(ham f . dr)      vs  f(A) - f(B)
// The two integrands are pointwise negatives of each other, so twin_gap
// (|primal.lhs + starred.lhs|) measures that both identities say the same
// thing.
struct GradientReport {
  double lhs = 0, rhs = 0, residual = 0;
  double starred_lhs = 0, starred_rhs = 0, starred_residual = 0;
  double twin_gap = 0;
  int panels = 0, order = 0;
};
GradientReport verify_gradient_theorem(const ScalarField2& f, const Curve2& c,
                                       QuadratureSpec q = {});

// Green's theorem, circulation form:
//   integral over S of (curl3 A) dS  vs  boundary circulation of A . dr
struct GreenReport {
  double circulation = 0, area_term = 0, residual = 0;
  int panels = 0, order = 0;
};
GreenReport verify_green(const VectorField2& a, const Region2& s, QuadratureSpec q = {});

// Green's theorem, flux form:
//   integral over S of (div A) dS  vs  boundary integral of *(A . dr)
struct FluxReport {
  double flux = 0, div_term = 0, residual = 0;
  int panels = 0, order = 0;
};
FluxReport verify_green_flux(const VectorField2& a, const Region2& s, QuadratureSpec q = {});

}  // namespace vc2d
