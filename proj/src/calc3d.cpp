#include "vc2d/calc3d.hpp"

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

// jet of the partial along axis k given the jet of f (see calc2d shift_x)
Jet3 shift(const Jet3& j, int k) {
  Jet3 r;
  r.v = j.d[k];
  for (int i = 0; i < 3; ++i) r.d[i] = j.dd[Jet3::at(std::min(i, k), std::max(i, k))];
  return r;
}

// lift a 2D jet into 3D with vanishing z-derivatives
Jet3 lift(const Jet2& j) {
  Jet3 r;
  r.v = j.v;
  r.d = {j.dx(), j.dy(), 0.0};
  r.dd[Jet3::at(0, 0)] = j.dxx();
  r.dd[Jet3::at(0, 1)] = j.dxy();
  r.dd[Jet3::at(1, 1)] = j.dyy();
  return r;
}

int min_order(const VectorField3& a) {
  return std::min({a.x.order(), a.y.order(), a.z.order()});
}

}  // namespace

VectorField3 grad(const ScalarField3& f) {
  require_order(f.order(), 1, "grad");
  const int ord = f.order() - 1;
  ScalarField3 gx([f](Point3 p) { return shift(f.jet(p), 0); }, ord);
  ScalarField3 gy([f](Point3 p) { return shift(f.jet(p), 1); }, ord);
  ScalarField3 gz([f](Point3 p) { return shift(f.jet(p), 2); }, ord);
  return {gx, gy, gz};
}

VectorField3 curl(const VectorField3& a) {
  require_order(min_order(a), 1, "curl");
  const int ord = min_order(a) - 1;
  const ScalarField3 ax = a.x, ay = a.y, az = a.z;
  ScalarField3 cx([ay, az](Point3 p) { return shift(az.jet(p), 1) - shift(ay.jet(p), 2); }, ord);
  ScalarField3 cy([ax, az](Point3 p) { return shift(ax.jet(p), 2) - shift(az.jet(p), 0); }, ord);
  ScalarField3 cz([ax, ay](Point3 p) { return shift(ay.jet(p), 0) - shift(ax.jet(p), 1); }, ord);
  return {cx, cy, cz};
}

ScalarField3 div(const VectorField3& a) {
  require_order(min_order(a), 1, "div");
  const int ord = min_order(a) - 1;
  const ScalarField3 ax = a.x, ay = a.y, az = a.z;
  return ScalarField3(
      [ax, ay, az](Point3 p) {
        return shift(ax.jet(p), 0) + shift(ay.jet(p), 1) + shift(az.jet(p), 2);
      },
      ord);
}

VectorField3 embed_scalar(const ScalarField2& f) {
  ScalarField3 zero = ScalarField3::constant(0.0);
  ScalarField3 az([f](Point3 p) { return -lift(f.jet({p.x, p.y})); }, f.order());
  return {zero, zero, az};
}

VectorField3 embed_vector(const VectorField2& a) {
  const ScalarField2 ax = a.x, ay = a.y;
  ScalarField3 ex([ax](Point3 p) { return lift(ax.jet({p.x, p.y})); }, a.x.order());
  ScalarField3 ey([ay](Point3 p) { return lift(ay.jet({p.x, p.y})); }, a.y.order());
  return {ex, ey, ScalarField3::constant(0.0)};
}

ScalarField3 negate(const ScalarField3& f) {
  return ScalarField3([f](Point3 p) { return -f.jet(p); }, f.order());
}

}  // namespace vc2d
