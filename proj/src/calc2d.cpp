#include "vc2d/calc2d.hpp"

#include <algorithm>
#include <string>

#include "vc2d/errors.hpp"

namespace vc2d {
namespace {

void require_order(int have, int need, const char* op) {
  if (have < need)
    throw DerivativeOrderError(std::string(op) + ": field carries " + std::to_string(have) +
                               " derivative level(s), " + std::to_string(need) + " needed");
}

// jet of df/dx given the jet of f; second partials of the result would need
// third derivatives of f and stay zero
Jet2 shift_x(const Jet2& j) {
  Jet2 r;
  r.v = j.dx();
  r.d = {j.dxx(), j.dxy()};
  return r;
}

Jet2 shift_y(const Jet2& j) {
  Jet2 r;
  r.v = j.dy();
  r.d = {j.dxy(), j.dyy()};
  return r;
}

}  // namespace

OneForm2 flat(const VectorField2& a) { return {a.x, a.y}; }

VectorField2 sharp(const OneForm2& alpha) { return {alpha.p, alpha.q}; }

TwoForm2 hodge(const ScalarField2& f) { return {f}; }

ScalarField2 hodge(const TwoForm2& beta) { return beta.g; }

OneForm2 hodge(const OneForm2& alpha) { return {negate(alpha.q), alpha.p}; }

OneForm2 hodge_inv(const OneForm2& alpha) { return {alpha.q, negate(alpha.p)}; }

OneForm2 d(const ScalarField2& f) {
  require_order(f.order(), 1, "d");
  const int ord = f.order() - 1;
  ScalarField2 p([f](Point2 pt) { return shift_x(f.jet(pt)); }, ord);
  ScalarField2 q([f](Point2 pt) { return shift_y(f.jet(pt)); }, ord);
  return {p, q};
}

TwoForm2 d(const OneForm2& alpha) {
  require_order(std::min(alpha.p.order(), alpha.q.order()), 1, "d");
  const int ord = std::min(alpha.p.order(), alpha.q.order()) - 1;
  const ScalarField2 p = alpha.p, q = alpha.q;
  ScalarField2 g(
      [p, q](Point2 pt) {
        const Jet2 jp = p.jet(pt), jq = q.jet(pt);
        Jet2 r;
        r.v = jq.dx() - jp.dy();
        r.d = {jq.dxx() - jp.dxy(), jq.dxy() - jp.dyy()};
        return r;
      },
      ord);
  return {g};
}

VectorField2 grad(const ScalarField2& f) {
  require_order(f.order(), 1, "grad");
  const int ord = f.order() - 1;
  ScalarField2 gx([f](Point2 pt) { return shift_x(f.jet(pt)); }, ord);
  ScalarField2 gy([f](Point2 pt) { return shift_y(f.jet(pt)); }, ord);
  return {gx, gy};
}

ScalarField2 curl3(const VectorField2& a) {
  require_order(std::min(a.x.order(), a.y.order()), 1, "curl3");
  const int ord = std::min(a.x.order(), a.y.order()) - 1;
  const ScalarField2 ax = a.x, ay = a.y;
  return ScalarField2(
      [ax, ay](Point2 pt) {
        const Jet2 jx = ax.jet(pt), jy = ay.jet(pt);
        Jet2 r;
        r.v = jy.dx() - jx.dy();
        r.d = {jy.dxx() - jx.dxy(), jy.dxy() - jx.dyy()};
        return r;
      },
      ord);
}

VectorField2 ham(const ScalarField2& f) {
  require_order(f.order(), 1, "ham");
  const int ord = f.order() - 1;
  ScalarField2 hx([f](Point2 pt) { return -shift_y(f.jet(pt)); }, ord);
  ScalarField2 hy([f](Point2 pt) { return shift_x(f.jet(pt)); }, ord);
  return {hx, hy};
}

ScalarField2 div(const VectorField2& a) {
  require_order(std::min(a.x.order(), a.y.order()), 1, "div");
  const int ord = std::min(a.x.order(), a.y.order()) - 1;
  const ScalarField2 ax = a.x, ay = a.y;
  return ScalarField2(
      [ax, ay](Point2 pt) {
        const Jet2 jx = ax.jet(pt), jy = ay.jet(pt);
        Jet2 r;
        r.v = jx.dx() + jy.dy();
        r.d = {jx.dxx() + jy.dxy(), jx.dxy() + jy.dyy()};
        return r;
      },
      ord);
}

VectorField2 perp(const VectorField2& a) { return {negate(a.y), a.x}; }

ScalarField2 laplacian(const ScalarField2& f) {
  require_order(f.order(), 2, "laplacian");
  return ScalarField2(
      [f](Point2 pt) {
        const Jet2 j = f.jet(pt);
        Jet2 r;
        r.v = j.dxx() + j.dyy();
        return r;
      },
      [f](Point2 pt) {
        const Jet2 j = f.jet(pt);
        return j.dxx() + j.dyy();
      },
      0);
}

VectorField2 grad_via_forms(const ScalarField2& f) { return sharp(d(f)); }

ScalarField2 curl3_via_forms(const VectorField2& a) { return hodge(d(flat(a))); }

VectorField2 ham_via_forms(const ScalarField2& f) { return sharp(hodge(d(f))); }

ScalarField2 div_via_forms(const VectorField2& a) {
  return negate(hodge(d(hodge_inv(flat(a)))));
}

ScalarField2 negate(const ScalarField2& f) {
  return ScalarField2([f](Point2 pt) { return -f.jet(pt); },
                      [f](Point2 pt) { return -f.value(pt); }, f.order());
}

VectorField2 negate(const VectorField2& a) { return {negate(a.x), negate(a.y)}; }

}  // namespace vc2d
