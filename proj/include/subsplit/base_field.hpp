#pragma once

#include "subsplit/bigint.hpp"

#include <vector>

namespace subsplit {

// Element of F_{p^k} = F_p[y]/h(y): exactly k residues in [0, p), constant first.
using Fe = std::vector<Int>;

// Unreduced accumulator for sums of products, 2k-1 integer slots.
using WideFe = std::vector<Int>;

class BaseField {
public:
    BaseField() = default;
    // h is monic of degree k over F_p, constant term first. An empty h means k = 1.
    BaseField(Int p, std::vector<Int> h);
    static BaseField prime(Int p) { return BaseField(std::move(p), {}); }

    const Int& p() const { return p_; }
    int degree() const { return k_; }
    const std::vector<Int>& modulus() const { return h_; }
    Int order() const;

    Fe zero() const { return Fe(k_, Int(0)); }
    Fe one() const;
    Fe from_int(const Int& a) const;
    Fe gen() const;
    bool is_zero(const Fe& a) const;
    bool is_one(const Fe& a) const;

    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe scale(const Fe& a, const Int& s) const;
    Fe inv(const Fe& a) const;
    Fe pow(const Fe& a, const Int& e) const;
    Fe frobenius(const Fe& a) const { return pow(a, p_); }
    void add_to(Fe& a, const Fe& b) const;
    void sub_from(Fe& a, const Fe& b) const;

    WideFe wide_zero() const { return WideFe(2 * k_ - 1, Int(0)); }
    void mul_acc(WideFe& acc, const Fe& a, const Fe& b) const;
    Fe reduce_wide(WideFe& acc) const;
    Fe reduce_poly(std::vector<Int> a) const;

    // Mixed-radix index: sum a_j p^j. Used for deterministic enumeration.
    Int index(const Fe& a) const;
    Fe from_index(Int idx) const;

    bool operator==(const BaseField& o) const { return p_ == o.p_ && h_ == o.h_; }
    bool operator!=(const BaseField& o) const { return !(*this == o); }

private:
    Int p_;
    int k_ = 1;
    std::vector<Int> h_;
};

// Polynomial helpers over F_p with Int coefficients, constant term first.
namespace fp_poly {
void normalize(std::vector<Int>& a);
std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& p);
std::vector<Int> rem(std::vector<Int> a, const std::vector<Int>& m, const Int& p);
// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
std::vector<Int> inv_mod(const std::vector<Int>& a, const std::vector<Int>& m, const Int& p);
} // namespace fp_poly

} // namespace subsplit
