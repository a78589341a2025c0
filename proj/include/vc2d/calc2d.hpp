#pragma once

#include "vc2d/field.hpp"

namespace vc2d {

// The 2D exterior calculus. The de Rham complex here is
//
//   functions --d--> 1-forms --d--> 2-forms,      d(d(.)) = 0,
//
// and the Euclidean metric in Cartesian coordinates supplies the musical
// isomorphisms (componentwise identities between 1-forms and vector fields)
// plus the Hodge star, whose action on the 1-form basis is *dx = dy,
// *dy = -dx and which matches functions with 2-forms via *f = f dS.
//
// The four first-order operators grad, curl3, ham, div are implemented once,
// from the Cartesian jet formulas. Their factorizations through flat/sharp/
// hodge/d are provided separately (grad_via_forms and friends) so that the
// algebraic wiring can be cross-checked rather than restated.

// musical isomorphisms: componentwise identity under the Euclidean metric
OneForm2 flat(const VectorField2& a);
VectorField2 sharp(const OneForm2& alpha);

// Hodge star across degrees 0 <-> 2 and on 1-forms (where its square is -id)
TwoForm2 hodge(const ScalarField2& f);
ScalarField2 hodge(const TwoForm2& beta);
OneForm2 hodge(const OneForm2& alpha);   // p dx + q dy  ->  -q dx + p dy
OneForm2 hodge_inv(const OneForm2& alpha);  // inverse on 1-forms, equals -hodge

// exterior derivative
OneForm2 d(const ScalarField2& f);   // (df/dx) dx + (df/dy) dy
TwoForm2 d(const OneForm2& alpha);   // (dq/dx - dp/dy) dS

// first-order operators, direct Cartesian formulas
VectorField2 grad(const ScalarField2& f);    // (df/dx, df/dy)
ScalarField2 curl3(const VectorField2& a);   // dAy/dx - dAx/dy
VectorField2 ham(const ScalarField2& f);     // (-df/dy, df/dx)
ScalarField2 div(const VectorField2& a);     // dAx/dx + dAy/dy

// quarter-turn rotation (-Ay, Ax); no derivatives involved
VectorField2 perp(const VectorField2& a);

// dxx + dyy, straight from the source jet; needs a full-order field
ScalarField2 laplacian(const ScalarField2& f);

// the same operators factored through the forms machinery
VectorField2 grad_via_forms(const ScalarField2& f);   // sharp . d
ScalarField2 curl3_via_forms(const VectorField2& a);  // hodge . d . flat
VectorField2 ham_via_forms(const ScalarField2& f);    // sharp . hodge . d
ScalarField2 div_via_forms(const VectorField2& a);    // -hodge . d . hodge_inv . flat

// pointwise negation, order preserved
ScalarField2 negate(const ScalarField2& f);
VectorField2 negate(const VectorField2& a);

}  // namespace vc2d
