#pragma once

#include "subsplit/fq_poly.hpp"

#include <optional>
#include <vector>

namespace subsplit {

// Element of F_{q^{n2}} = F_q[x]/psi(x); exactly n2 coefficients, constant first.
struct TowerElement {
    std::vector<Fe> c;

    bool operator==(const TowerElement& o) const { return c == o.c; }
    bool operator!=(const TowerElement& o) const { return c != o.c; }
};

class TowerField {
public:
    TowerField() = default;
    TowerField(BaseField F, FqPoly psi);

    const PolyRing& ring() const { return R_; }
    const BaseField& base() const { return R_.field(); }
    const FqPoly& modulus() const { return psi_; }
    int degree() const { return n2_; }
    int n1() const { return base().degree(); }
    Int order() const;  // q^{n2}

    TowerElement zero() const;
    TowerElement one() const;
    TowerElement x() const;
    TowerElement embed(const Fe& a) const;
    TowerElement from_poly(const FqPoly& a) const;
    FqPoly to_poly(const TowerElement& a) const;

    bool is_zero(const TowerElement& a) const;
    bool is_one(const TowerElement& a) const;

    TowerElement add(const TowerElement& a, const TowerElement& b) const;
    TowerElement sub(const TowerElement& a, const TowerElement& b) const;
    TowerElement mul(const TowerElement& a, const TowerElement& b) const;
    TowerElement scale(const TowerElement& a, const Fe& s) const;
    TowerElement inv(const TowerElement& a) const;
    TowerElement div(const TowerElement& a, const TowerElement& b) const { return mul(a, inv(b)); }
    TowerElement pow(const TowerElement& a, const Int& e) const;

    // Flattened F_p coordinates, index i*n1 + j for the coefficient of x^i y^j.
    std::vector<Int> coords(const TowerElement& a) const;
    TowerElement from_coords(const std::vector<Int>& v) const;
    Int index(const TowerElement& a) const;
    TowerElement from_index(const Int& idx) const;

    void check(const TowerElement& a) const;
    bool operator==(const TowerField& o) const { return base() == o.base() && psi_ == o.psi_; }

private:
    PolyRing R_;
    FqPoly psi_;
    int n2_ = 0;
};

struct FieldTower {
    TowerField K;
    TowerElement g;
    Int ell;

    const Int& p() const { return K.base().p(); }
    int n1() const { return K.n1(); }
    int n2() const { return K.degree(); }
    int n() const { return n1() * n2(); }
    Int group_order() const { return K.order() - 1; }
    Int cofactor() const { return group_order() / ell; }
};

// Field description as read from a spec file. Absent optionals are searched for.
struct FieldSpec {
    Int p;
    int n1 = 1;
    int n2 = 1;
    std::optional<std::vector<Int>> h;
    std::optional<std::vector<std::vector<Int>>> psi;  // psi[i] = coefficient of x^i over y
    std::optional<std::vector<std::vector<Int>>> g;
    std::optional<Int> ell;
};

FieldTower tower_from_spec(const FieldSpec& spec);

// Builds an element from per-x-degree coefficient lists over y, reducing mod p, h, psi.
TowerElement element_from_lists(const TowerField& K, const std::vector<std::vector<Int>>& a);
FqPoly fq_poly_from_lists(const BaseField& F, const std::vector<std::vector<Int>>& a);

// True when a^(p^d - 1) = 1 for some proper divisor d of n.
bool in_proper_subfield(const FieldTower& T, const TowerElement& a);

// Checks the subgroup relation (a/b)^((p^n-1)/ell) = 1.
bool same_log_class(const FieldTower& T, const TowerElement& a, const TowerElement& b);

} // namespace subsplit
