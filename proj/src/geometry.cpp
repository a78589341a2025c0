#include "vc2d/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "vc2d/errors.hpp"

namespace vc2d {
namespace {

const std::vector<std::string> kTVar = {"t"};

FieldExpr t_const(double c) { return FieldExpr::number(c, kTVar); }
FieldExpr t_var() { return FieldExpr::variable("t", kTVar); }

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation_sign(Point2 o, Point2 a, Point2 b) {
  const double c = cross(o, a, b);
  return (c > 0.0) - (c < 0.0);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  // collinearity assumed by the caller
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  const int o1 = orientation_sign(p1, p2, q1);
  const int o2 = orientation_sign(p1, p2, q2);
  const int o3 = orientation_sign(q1, q2, p1);
  const int o4 = orientation_sign(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

// inside or on the boundary of triangle (a, b, c), CCW or degenerate
bool point_in_triangle(Point2 a, Point2 b, Point2 c, Point2 p) {
  const double d1 = cross(a, b, p);
  const double d2 = cross(b, c, p);
  const double d3 = cross(c, a, p);
  const bool has_neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
  const bool has_pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
  return !(has_neg && has_pos);
}

}  // namespace

Curve2::Curve2(FieldExpr x_of_t, FieldExpr y_of_t, double t0, double t1, bool closed)
    : x_(std::move(x_of_t)), y_(std::move(y_of_t)), t0_(t0), t1_(t1), closed_(closed) {
  if (x_.vars().size() != 1 || y_.vars().size() != 1)
    throw std::invalid_argument("curve components must be expressions in one variable");
  if (!(t0 < t1)) throw std::invalid_argument("curve needs t0 < t1");
  if (closed_) {
    const Point2 a = start(), b = end();
    if (std::abs(a.x - b.x) > 1e-12 || std::abs(a.y - b.y) > 1e-12)
      throw std::invalid_argument("curve marked closed but endpoints differ");
  }
}

Curve2 Curve2::segment(Point2 a, Point2 b) {
  FieldExpr x = t_const(a.x) + t_const(b.x - a.x) * t_var();
  FieldExpr y = t_const(a.y) + t_const(b.y - a.y) * t_var();
  return Curve2(std::move(x), std::move(y), 0.0, 1.0);
}

Curve2 Curve2::circle(Point2 center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle needs a positive radius");
  FieldExpr x = t_const(center.x) + t_const(radius) * cos(t_var());
  FieldExpr y = t_const(center.y) + t_const(radius) * sin(t_var());
  return Curve2(std::move(x), std::move(y), 0.0, 2.0 * std::numbers::pi, true);
}

Curve2 Curve2::arc(Point2 center, double radius, double theta0, double theta1) {
  if (!(radius > 0.0)) throw std::invalid_argument("arc needs a positive radius");
  FieldExpr x = t_const(center.x) + t_const(radius) * cos(t_var());
  FieldExpr y = t_const(center.y) + t_const(radius) * sin(t_var());
  return Curve2(std::move(x), std::move(y), theta0, theta1);
}

Point2 Curve2::at(double t) const {
  const double ts[1] = {t};
  return {x_.eval(ts), y_.eval(ts)};
}

Curve2::Sample Curve2::sample(double t) const {
  const double ts[1] = {t};
  const Jet<1> jx = x_.jet<1>(ts);
  const Jet<1> jy = y_.jet<1>(ts);
  return {{jx.v, jy.v}, {jx.d[0], jy.d[0]}};
}

Curve2 Curve2::reversed() const {
  const FieldExpr flipped = t_const(t0_ + t1_) - t_var();
  return Curve2(x_.substitute(0, flipped), y_.substitute(0, flipped), t0_, t1_, closed_);
}

double polygon_signed_area(std::span<const Point2> vertices) {
  double twice = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices[i];
    const Point2 b = vertices[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

bool polygon_is_simple(std::span<const Point2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices[i];
    const Point2 b = vertices[(i + 1) % n];
    if (a.x == b.x && a.y == b.y) return false;  // repeated vertex
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a1 = vertices[i];
    const Point2 a2 = vertices[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // adjacent edges share an endpoint by construction
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Point2 b1 = vertices[j];
      const Point2 b2 = vertices[(j + 1) % n];
      if (segments_intersect(a1, a2, b1, b2)) return false;
    }
  }
  return true;
}

std::vector<std::array<Point2, 3>> ear_clip(std::span<const Point2> vertices) {
  std::vector<int> idx(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[i] = static_cast<int>(i);

  std::vector<std::array<Point2, 3>> triangles;
  triangles.reserve(vertices.size() > 2 ? vertices.size() - 2 : 0);

  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Point2 prev = vertices[idx[(k + idx.size() - 1) % idx.size()]];
      const Point2 cur = vertices[idx[k]];
      const Point2 next = vertices[idx[(k + 1) % idx.size()]];
      const double turn = cross(prev, cur, next);
      if (turn < 0.0) continue;  // reflex corner
      if (turn == 0.0) {
        // collinear corner spans no area; drop the middle vertex
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
        clipped = true;
        break;
      }
      bool blocked = false;
      for (std::size_t m = 0; m < idx.size() && !blocked; ++m) {
        if (m == k || m == (k + 1) % idx.size() || m == (k + idx.size() - 1) % idx.size())
          continue;
        blocked = point_in_triangle(prev, cur, next, vertices[idx[m]]);
      }
      if (blocked) continue;
      triangles.push_back({prev, cur, next});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
      break;
    }
    if (!clipped) throw std::logic_error("ear clipping failed; polygon not simple CCW?");
  }
  if (idx.size() == 3) triangles.push_back({vertices[idx[0]], vertices[idx[1]], vertices[idx[2]]});
  return triangles;
}

Region2 Region2::rectangle(double x0, double x1, double y0, double y1) {
  if (!(x0 < x1 && y0 < y1)) throw std::invalid_argument("rectangle needs x0 < x1 and y0 < y1");
  Region2 r(Kind::Rectangle);
  r.rect_ = {x0, x1, y0, y1};
  return r;
}

Region2 Region2::disc(Point2 center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("disc needs a positive radius");
  Region2 r(Kind::Disc);
  r.center_ = center;
  r.radius_ = radius;
  return r;
}

Region2 Region2::polygon(std::vector<Point2> vertices) {
  if (vertices.size() < 3) throw PolygonError("polygon needs at least 3 vertices");
  if (!polygon_is_simple(vertices)) throw PolygonError("polygon is self-intersecting");
  if (!(polygon_signed_area(vertices) > 0.0))
    throw PolygonError("polygon must be counter-clockwise with positive area");
  Region2 r(Kind::Polygon);
  r.vertices_ = std::move(vertices);
  return r;
}

std::vector<Curve2> Region2::boundary() const {
  std::vector<Curve2> curves;
  switch (kind_) {
    case Kind::Rectangle: {
      const Point2 a{rect_.x0, rect_.y0}, b{rect_.x1, rect_.y0};
      const Point2 c{rect_.x1, rect_.y1}, e{rect_.x0, rect_.y1};
      curves.push_back(Curve2::segment(a, b));
      curves.push_back(Curve2::segment(b, c));
      curves.push_back(Curve2::segment(c, e));
      curves.push_back(Curve2::segment(e, a));
      break;
    }
    case Kind::Disc:
      curves.push_back(Curve2::circle(center_, radius_));
      break;
    case Kind::Polygon: {
      const std::size_t n = vertices_.size();
      for (std::size_t i = 0; i < n; ++i)
        curves.push_back(Curve2::segment(vertices_[i], vertices_[(i + 1) % n]));
      break;
    }
  }
  return curves;
}

bool Region2::contains(Point2 p) const {
  switch (kind_) {
    case Kind::Rectangle:
      return rect_.x0 <= p.x && p.x <= rect_.x1 && rect_.y0 <= p.y && p.y <= rect_.y1;
    case Kind::Disc: {
      const double dx = p.x - center_.x, dy = p.y - center_.y;
      return dx * dx + dy * dy <= radius_ * radius_;
    }
    case Kind::Polygon: {
      // even-odd ray cast towards +x
      bool inside = false;
      const std::size_t n = vertices_.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
          const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
          if (p.x < x_cross) inside = !inside;
        }
      }
      return inside;
    }
  }
  return false;
}

Region2::Bounds Region2::bounds() const {
  switch (kind_) {
    case Kind::Rectangle:
      return rect_;
    case Kind::Disc:
      return {center_.x - radius_, center_.x + radius_, center_.y - radius_,
              center_.y + radius_};
    case Kind::Polygon: {
      Bounds b{vertices_[0].x, vertices_[0].x, vertices_[0].y, vertices_[0].y};
      for (const Point2& v : vertices_) {
        b.x0 = std::min(b.x0, v.x);
        b.x1 = std::max(b.x1, v.x);
        b.y0 = std::min(b.y0, v.y);
        b.y1 = std::max(b.y1, v.y);
      }
      return b;
    }
  }
  return {0, 0, 0, 0};
}

}  // namespace vc2d
