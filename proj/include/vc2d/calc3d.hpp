#pragma once

#include "vc2d/field.hpp"

namespace vc2d {

// Minimal 3D operators, enough to check the classical identities
// curl(grad f) = 0 and div(curl A) = 0 and to relate the planar operators to
// their 3D counterparts through the two embeddings below.

VectorField3 grad(const ScalarField3& f);
VectorField3 curl(const VectorField3& a);
ScalarField3 div(const VectorField3& a);

// lift a planar scalar field to the 3D field (0, 0, -f(x, y));
// its curl equals (ham f, 0)
VectorField3 embed_scalar(const ScalarField2& f);

// lift a planar vector field to (A_x(x, y), A_y(x, y), 0);
// its curl equals (0, 0, curl3 A)
VectorField3 embed_vector(const VectorField2& a);

ScalarField3 negate(const ScalarField3& f);

}  // namespace vc2d
