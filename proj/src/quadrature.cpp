#include "vc2d/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vc2d {
namespace {

constexpr int kMaxOrder = 16;

// Newton iteration on the Legendre recurrence; nodes are symmetric about 0.
GaussRule compute_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    double z1;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::abs(z - z1) > 1e-15);
    r.nodes[i - 1] = -z;
    r.nodes[n - i] = z;
    r.weights[i - 1] = r.weights[n - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return r;
}

void check_spec(QuadratureSpec q) {
  if (q.panels < 1) throw std::invalid_argument("quadrature needs at least one panel");
  if (q.order < 2 || q.order > kMaxOrder)
    throw std::invalid_argument("Gauss order must be between 2 and 16");
}

// composite Gauss-Legendre sweep over [a, b]: calls f(t, weight) with the
// physical weight, panel by panel in order
template <class F>
void gl_sweep(double a, double b, int panels, const GaussRule& rule, F&& f) {
  const double h = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      f(mid + half * rule.nodes[i], half * rule.weights[i]);
  }
}

// Symmetric 7-point degree-5 rule on a triangle (Hammer-Stroud); weights are
// relative to the triangle area and the abscissae come out of sqrt(15), so
// there are no typed-in tables to mistrust.
struct TrianglePoint {
  double l0, l1, l2;  // barycentric
  double w;
};

const std::array<TrianglePoint, 7>& triangle_rule() {
  static const std::array<TrianglePoint, 7> pts = [] {
    const double s = std::sqrt(15.0);
    const double a1 = (6.0 + s) / 21.0, b1 = (9.0 - 2.0 * s) / 21.0, w1 = (155.0 + s) / 1200.0;
    const double a2 = (6.0 - s) / 21.0, b2 = (9.0 + 2.0 * s) / 21.0, w2 = (155.0 - s) / 1200.0;
    return std::array<TrianglePoint, 7>{{{1.0 / 3, 1.0 / 3, 1.0 / 3, 9.0 / 40},
                                         {b1, a1, a1, w1},
                                         {a1, b1, a1, w1},
                                         {a1, a1, b1, w1},
                                         {b2, a2, a2, w2},
                                         {a2, b2, a2, w2},
                                         {a2, a2, b2, w2}}};
  }();
  return pts;
}

double triangle_area(const std::array<Point2, 3>& t) {
  return 0.5 * ((t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[2].x - t[0].x) * (t[1].y - t[0].y));
}

double integrate_triangle(const ScalarField2& g, const std::array<Point2, 3>& tri, int panels) {
  // refine into panels^2 congruent subtriangles, then apply the 7-point rule
  const double n = panels;
  const Point2 p0 = tri[0];
  const Point2 e1{(tri[1].x - tri[0].x) / n, (tri[1].y - tri[0].y) / n};
  const Point2 e2{(tri[2].x - tri[0].x) / n, (tri[2].y - tri[0].y) / n};
  auto corner = [&](int i, int j) {
    return Point2{p0.x + i * e1.x + j * e2.x, p0.y + i * e1.y + j * e2.y};
  };
  auto one = [&](Point2 a, Point2 b, Point2 c) {
    const std::array<Point2, 3> t{a, b, c};
    const double area = triangle_area(t);
    double s = 0.0;
    for (const TrianglePoint& tp : triangle_rule()) {
      const Point2 p{tp.l0 * a.x + tp.l1 * b.x + tp.l2 * c.x,
                     tp.l0 * a.y + tp.l1 * b.y + tp.l2 * c.y};
      s += tp.w * g.value(p);
    }
    return s * area;
  };
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    for (int j = 0; j < panels - i; ++j) {
      total += one(corner(i, j), corner(i + 1, j), corner(i, j + 1));
      if (j < panels - i - 1)
        total += one(corner(i + 1, j), corner(i + 1, j + 1), corner(i, j + 1));
    }
  }
  return total;
}

double sum_boundary(const OneForm2& alpha, const Region2& s, QuadratureSpec q) {
  double total = 0.0;
  for (const Curve2& c : s.boundary()) total += line_integral(alpha, c, q);
  return total;
}

}  // namespace

const GaussRule& gauss_rule(int order) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("Gauss order must be between 1 and 16");
  static const std::vector<GaussRule> rules = [] {
    std::vector<GaussRule> all;
    all.reserve(kMaxOrder);
    for (int n = 1; n <= kMaxOrder; ++n) all.push_back(compute_rule(n));
    return all;
  }();
  return rules[order - 1];
}

double line_integral(const OneForm2& alpha, const Curve2& c, QuadratureSpec q) {
  check_spec(q);
  const GaussRule& rule = gauss_rule(q.order);
  double total = 0.0;
  gl_sweep(c.t0(), c.t1(), q.panels, rule, [&](double t, double w) {
    const Curve2::Sample s = c.sample(t);
    const double p = alpha.p.value(s.position);
    const double qq = alpha.q.value(s.position);
    total += w * (p * s.velocity.x + qq * s.velocity.y);
  });
  return total;
}

double area_integral(const TwoForm2& beta, const Region2& s, QuadratureSpec q) {
  check_spec(q);
  const GaussRule& rule = gauss_rule(q.order);
  const ScalarField2& g = beta.g;
  switch (s.kind()) {
    case Region2::Kind::Rectangle: {
      const Region2::Bounds b = s.rect();
      double total = 0.0;
      gl_sweep(b.x0, b.x1, q.panels, rule, [&](double x, double wx) {
        double row = 0.0;
        gl_sweep(b.y0, b.y1, q.panels, rule,
                 [&](double y, double wy) { row += wy * g.value({x, y}); });
        total += wx * row;
      });
      return total;
    }
    case Region2::Kind::Disc: {
      const Point2 c = s.center();
      const double radius = s.radius();
      double total = 0.0;
      gl_sweep(0.0, radius, q.panels, rule, [&](double r, double wr) {
        double ring = 0.0;
        gl_sweep(0.0, 2.0 * std::numbers::pi, q.panels, rule, [&](double th, double wt) {
          ring += wt * g.value({c.x + r * std::cos(th), c.y + r * std::sin(th)});
        });
        total += wr * r * ring;
      });
      return total;
    }
    case Region2::Kind::Polygon: {
      double total = 0.0;
      for (const auto& tri : ear_clip(s.vertices())) total += integrate_triangle(g, tri, q.panels);
      return total;
    }
  }
  throw std::logic_error("unknown region kind");
}

IntegralEstimate line_integral_estimate(const OneForm2& alpha, const Curve2& c,
                                        QuadratureSpec q) {
  const double coarse = line_integral(alpha, c, q);
  const double fine = line_integral(alpha, c, {2 * q.panels, q.order});
  return {fine, std::abs(fine - coarse)};
}

IntegralEstimate area_integral_estimate(const TwoForm2& beta, const Region2& s,
                                        QuadratureSpec q) {
  const double coarse = area_integral(beta, s, q);
  const double fine = area_integral(beta, s, {2 * q.panels, q.order});
  return {fine, std::abs(fine - coarse)};
}

GradientReport verify_gradient_theorem(const ScalarField2& f, const Curve2& c,
                                       QuadratureSpec q) {
  GradientReport r;
  r.panels = q.panels;
  r.order = q.order;
  const double fa = f.value(c.start());
  const double fb = f.value(c.end());

  r.lhs = line_integral(flat(grad(f)), c, q);
  r.rhs = fb - fa;
  r.residual = std::abs(r.lhs - r.rhs);

  r.starred_lhs = line_integral(hodge(flat(ham(f))), c, q);
  r.starred_rhs = fa - fb;
  r.starred_residual = std::abs(r.starred_lhs - r.starred_rhs);

  r.twin_gap = std::abs(r.lhs + r.starred_lhs);
  return r;
}

GreenReport verify_green(const VectorField2& a, const Region2& s, QuadratureSpec q) {
  GreenReport r;
  r.panels = q.panels;
  r.order = q.order;
  r.circulation = sum_boundary(flat(a), s, q);
  r.area_term = area_integral(hodge(curl3(a)), s, q);
  r.residual = std::abs(r.circulation - r.area_term);
  return r;
}

FluxReport verify_green_flux(const VectorField2& a, const Region2& s, QuadratureSpec q) {
  FluxReport r;
  r.panels = q.panels;
  r.order = q.order;
  r.flux = sum_boundary(hodge(flat(a)), s, q);
  r.div_term = area_integral(hodge(div(a)), s, q);
  r.residual = std::abs(r.flux - r.div_term);
  return r;
}

}  // namespace vc2d
