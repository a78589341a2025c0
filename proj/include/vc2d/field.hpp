#pragma once

#include <functional>
#include <memory>

#include "vc2d/expr.hpp"
#include "vc2d/jet.hpp"
#include "vc2d/point.hpp"

namespace vc2d {

using Jet2 = Jet<2>;
using Jet3 = Jet<3>;

// number of derivative levels an expression-backed field carries
inline constexpr int kFullOrder = 2;

// A scalar field evaluated through second-order jets. `order` is the number
// of derivative levels of the returned jet that are meaningful: expression
// fields carry 2, and each differential operator applied to a field costs
// one level (entries beyond `order` are zero). Fields are immutable and
// evaluation is pure, so concurrent use needs no synchronization.
class ScalarField2 {
 public:
  using JetFn = std::function<Jet2(Point2)>;
  using ValueFn = std::function<double(Point2)>;

  ScalarField2(JetFn jet_fn, int order)
      : jet_(std::make_shared<JetFn>(std::move(jet_fn))), order_(order) {}

  // value_fn must agree with jet_fn's value entry; it exists so fields whose
  // jets are expensive (quadrature-backed reconstructions) can serve plain
  // values cheaply
  ScalarField2(JetFn jet_fn, ValueFn value_fn, int order)
      : jet_(std::make_shared<JetFn>(std::move(jet_fn))),
        value_(std::make_shared<ValueFn>(std::move(value_fn))),
        order_(order) {}

  static ScalarField2 from_expr(const FieldExpr& e);
  static ScalarField2 constant(double c);

  Jet2 jet(Point2 p) const { return (*jet_)(p); }
  double value(Point2 p) const { return value_ ? (*value_)(p) : (*jet_)(p).v; }
  int order() const { return order_; }

 private:
  std::shared_ptr<const JetFn> jet_;
  std::shared_ptr<const ValueFn> value_;
  int order_;
};

class ScalarField3 {
 public:
  using JetFn = std::function<Jet3(Point3)>;

  ScalarField3(JetFn jet_fn, int order)
      : jet_(std::make_shared<JetFn>(std::move(jet_fn))), order_(order) {}

  static ScalarField3 from_expr(const FieldExpr& e);
  static ScalarField3 constant(double c);

  Jet3 jet(Point3 p) const { return (*jet_)(p); }
  double value(Point3 p) const { return (*jet_)(p).v; }
  int order() const { return order_; }

 private:
  std::shared_ptr<const JetFn> jet_;
  int order_;
};

// vector field A = (A_x, A_y)
struct VectorField2 {
  ScalarField2 x;
  ScalarField2 y;

  static VectorField2 from_exprs(const FieldExpr& ax, const FieldExpr& ay) {
    return {ScalarField2::from_expr(ax), ScalarField2::from_expr(ay)};
  }
};

// 1-form p dx + q dy
struct OneForm2 {
  ScalarField2 p;
  ScalarField2 q;
};

// 2-form g dS with dS = dx ^ dy the area form
struct TwoForm2 {
  ScalarField2 g;
};

struct VectorField3 {
  ScalarField3 x;
  ScalarField3 y;
  ScalarField3 z;

  static VectorField3 from_exprs(const FieldExpr& ax, const FieldExpr& ay, const FieldExpr& az) {
    return {ScalarField3::from_expr(ax), ScalarField3::from_expr(ay),
            ScalarField3::from_expr(az)};
  }
};

// value of a two-variable expression at a point
inline double eval_at(const FieldExpr& e, Point2 p) {
  const double xs[2] = {p.x, p.y};
  return e.eval(xs);
}

// full second-order jet of a two-variable expression at a point
inline Jet2 jet_at(const FieldExpr& e, Point2 p) {
  const double xs[2] = {p.x, p.y};
  return e.jet<2>(xs);
}

}  // namespace vc2d
