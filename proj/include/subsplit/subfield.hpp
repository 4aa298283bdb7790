#pragma once

#include "subsplit/tower.hpp"

#include <vector>

namespace subsplit {

// F_{p^k} inside F_{p^{n1}} together with the F_{p^k}-coordinates of
// F_{p^{n1}} on the basis 1, y, ..., y^(m-1), m = n1/k.
class ScalarSubfield {
public:
    ScalarSubfield() = default;
    ScalarSubfield(const BaseField& F, int k);

    int degree() const { return k_; }
    int width() const { return m_; }
    const Fe& generator() const { return z_; }

    // m entries of F_{p^k}, each stored as an element of F_{p^{n1}}.
    std::vector<Fe> expand(const Fe& a) const;
    Fe pack(const std::vector<Fe>& parts, size_t offset = 0) const;
    // The element sum_a digits[a] z^a.
    Fe element(const std::vector<Int>& digits) const;
    Int order() const;

private:
    BaseField F_;
    int k_ = 1, m_ = 1;
    Fe z_;
    std::vector<Fe> zpow_;
    std::vector<std::vector<Int>> binv_;  // F_p coords -> (j*k + a) digits
};

// Rank of a matrix over F_p (rows of residues).
int rank_mod_p(std::vector<std::vector<Int>> rows, const Int& p);

} // namespace subsplit
