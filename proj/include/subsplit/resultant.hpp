#pragma once

#include "subsplit/int_poly.hpp"

namespace subsplit {

// Res(a, b) over Z by the subresultant remainder sequence.
Int resultant(const IntPoly& a, const IntPoly& b);

// Res_x(P, f) where P has coefficients in Z[y] and f is in Z[x]; the result is in Z[y].
IntPoly resultant_x(const IntBiPoly& P, const IntPoly& f);

// Pseudonorm: Res_y(Res_x(P, f), h), or Res_x(P, f) alone when h is empty or linear
// (n1 = 1), in which case P must not depend on y.
Int resultant_int(const IntBiPoly& P, const IntPoly& f, const IntPoly& h = {});

} // namespace subsplit
