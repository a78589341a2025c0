#include "vc2d/field.hpp"

#include <stdexcept>

namespace vc2d {

ScalarField2 ScalarField2::from_expr(const FieldExpr& e) {
  if (e.vars().size() != 2)
    throw std::invalid_argument("a 2D scalar field needs exactly two variables");
  auto expr = std::make_shared<const FieldExpr>(e);
  JetFn jet_fn = [expr](Point2 p) {
    const double xs[2] = {p.x, p.y};
    return expr->jet<2>(xs);
  };
  ValueFn value_fn = [expr](Point2 p) {
    const double xs[2] = {p.x, p.y};
    return expr->eval(xs);
  };
  return {std::move(jet_fn), std::move(value_fn), kFullOrder};
}

ScalarField2 ScalarField2::constant(double c) {
  return {[c](Point2) { return Jet2::constant(c); }, [c](Point2) { return c; }, kFullOrder};
}

ScalarField3 ScalarField3::from_expr(const FieldExpr& e) {
  if (e.vars().size() != 3)
    throw std::invalid_argument("a 3D scalar field needs exactly three variables");
  auto expr = std::make_shared<const FieldExpr>(e);
  JetFn jet_fn = [expr](Point3 p) {
    const double xs[3] = {p.x, p.y, p.z};
    return expr->jet<3>(xs);
  };
  return {std::move(jet_fn), kFullOrder};
}

ScalarField3 ScalarField3::constant(double c) {
  return {[c](Point3) { return Jet3::constant(c); }, kFullOrder};
}

}  // namespace vc2d
