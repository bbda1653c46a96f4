#pragma once
// Local intersection number at the origin of two plane curves.

#include "jc/bipoly.hpp"

namespace jc {

// (F, G)_0; throws MathError when F and G share a factor through the origin.
long local_intersection(const BiPoly& F, const BiPoly& G);

}  // namespace jc
