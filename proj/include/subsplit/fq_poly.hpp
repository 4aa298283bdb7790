#pragma once

#include "subsplit/base_field.hpp"

#include <utility>
#include <vector>

namespace subsplit {

// Polynomial over F_q, constant term first, no trailing zeros.
// The zero polynomial has no coefficients and degree -1.
struct FqPoly {
    std::vector<Fe> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const FqPoly& o) const { return c == o.c; }
    bool operator!=(const FqPoly& o) const { return c != o.c; }
};

class PolyRing {
public:
    PolyRing() = default;
    explicit PolyRing(BaseField F) : F_(std::move(F)) {}

    const BaseField& field() const { return F_; }

    void normalize(FqPoly& a) const;
    FqPoly zero() const { return {}; }
    FqPoly one() const { return constant(F_.one()); }
    FqPoly x() const;
    FqPoly constant(const Fe& c) const;
    FqPoly monomial(const Fe& c, int deg) const;
    FqPoly from_ints(const std::vector<Int>& coeffs) const;

    bool is_one(const FqPoly& a) const;
    const Fe& lead(const FqPoly& a) const { return a.c.back(); }

    FqPoly add(const FqPoly& a, const FqPoly& b) const;
    FqPoly sub(const FqPoly& a, const FqPoly& b) const;
    FqPoly neg(const FqPoly& a) const;
    FqPoly mul(const FqPoly& a, const FqPoly& b) const;
    FqPoly scale(const FqPoly& a, const Fe& s) const;
    FqPoly shift(const FqPoly& a, int k) const;
    FqPoly monic(const FqPoly& a) const;
    FqPoly derivative(const FqPoly& a) const;

    std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) const;
    FqPoly rem(const FqPoly& a, const FqPoly& b) const;
    FqPoly quo(const FqPoly& a, const FqPoly& b) const { return divrem(a, b).first; }
    FqPoly gcd(FqPoly a, FqPoly b) const;

    FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) const;
    FqPoly powmod(const FqPoly& a, const Int& e, const FqPoly& m) const;
    // Applies coefficientwise a -> a^p (the F_p-linear Frobenius on coefficients).
    FqPoly frobenius_coeffs(const FqPoly& a) const;
    Fe eval(const FqPoly& a, const Fe& x) const;

    // Lexicographic order: degree first, then coefficients from the constant term up.
    bool less(const FqPoly& a, const FqPoly& b) const;

private:
    BaseField F_;
};

} // namespace subsplit
