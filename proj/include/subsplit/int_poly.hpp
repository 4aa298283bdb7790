#pragma once

#include "subsplit/bigint.hpp"

#include <vector>

namespace subsplit {

// Integer polynomial, constant term first, no trailing zeros.
using IntPoly = std::vector<Int>;

// Bivariate integer polynomial: c[i] is the coefficient of x^i, a polynomial in y.
struct IntBiPoly {
    std::vector<IntPoly> c;

    int degree_x() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const IntBiPoly& o) const { return c == o.c; }
};

namespace ipoly {

void normalize(IntPoly& a);
int degree(const IntPoly& a);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const Int& s);
IntPoly pow(const IntPoly& a, unsigned long e);
// Division that must be exact; throws DomainError otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
Int eval(const IntPoly& a, const Int& x);
Int max_norm(const IntPoly& a);
Int content(const IntPoly& a);
IntPoly reduce_mod(const IntPoly& a, const Int& p);

} // namespace ipoly

void normalize(IntBiPoly& a);
IntBiPoly bi_mul(const IntBiPoly& a, const IntBiPoly& b);
Int max_norm(const IntBiPoly& a);
IntBiPoly bi_from_univariate(const IntPoly& a);

} // namespace subsplit
