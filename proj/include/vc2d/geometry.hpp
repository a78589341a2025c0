#pragma once

#include <array>
#include <span>
#include <vector>

#include "vc2d/expr.hpp"
#include "vc2d/point.hpp"

namespace vc2d {

// Parametrized path t -> (x(t), y(t)) with expression-backed components in
// the single variable t. `closed` asserts that start and end coincide
// (checked to 1e-12 at construction).
class Curve2 {
 public:
  Curve2(FieldExpr x_of_t, FieldExpr y_of_t, double t0, double t1, bool closed = false);

  static Curve2 segment(Point2 a, Point2 b);                  // t in [0, 1]
  static Curve2 circle(Point2 center, double radius);         // t in [0, 2*pi], closed
  static Curve2 arc(Point2 center, double radius, double theta0, double theta1);

  struct Sample {
    Point2 position;
    Point2 velocity;  // d/dt of the parametrization
  };

  Point2 at(double t) const;
  Sample sample(double t) const;
  Point2 start() const { return at(t0_); }
  Point2 end() const { return at(t1_); }

  double t0() const { return t0_; }
  double t1() const { return t1_; }
  bool closed() const { return closed_; }
  const FieldExpr& x_of_t() const { return x_; }
  const FieldExpr& y_of_t() const { return y_; }

  // same trace walked the other way: components composed with t0 + t1 - t
  Curve2 reversed() const;

 private:
  FieldExpr x_;
  FieldExpr y_;
  double t0_;
  double t1_;
  bool closed_;
};

double polygon_signed_area(std::span<const Point2> vertices);
bool polygon_is_simple(std::span<const Point2> vertices);

// ear-clipping triangulation of a simple counter-clockwise polygon
std::vector<std::array<Point2, 3>> ear_clip(std::span<const Point2> vertices);

// Integration domain with a positively oriented (counter-clockwise)
// boundary, matching the orientation of the area form dS = dx ^ dy.
class Region2 {
 public:
  enum class Kind { Rectangle, Disc, Polygon };

  static Region2 rectangle(double x0, double x1, double y0, double y1);
  static Region2 disc(Point2 center, double radius);
  // at least 3 vertices, simple, counter-clockwise (signed area > 0)
  static Region2 polygon(std::vector<Point2> vertices);

  Kind kind() const { return kind_; }
  std::vector<Curve2> boundary() const;
  bool contains(Point2 p) const;

  struct Bounds {
    double x0, x1, y0, y1;
  };
  Bounds bounds() const;

  // kind-specific accessors
  Bounds rect() const { return rect_; }
  Point2 center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<Point2>& vertices() const { return vertices_; }

 private:
  explicit Region2(Kind k) : kind_(k) {}

  Kind kind_;
  Bounds rect_{0, 0, 0, 0};
  Point2 center_{};
  double radius_ = 0.0;
  std::vector<Point2> vertices_;
};

}  // namespace vc2d
