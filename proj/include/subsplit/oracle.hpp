#pragma once

#include "subsplit/bigint.hpp"
#include "subsplit/tower.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace subsplit {

struct OracleBudget {
    Int max_group_order = Int(1) << 30;
    uint64_t max_enumeration = uint64_t(1) << 22;
    // Rho is given about 2^(bits/4 + 2) iterations per split, which covers any
    // input whose second largest prime factor has at most bits/2 bits.
    unsigned max_factor_bits = 128;
};

using IntFactorization = std::vector<std::pair<Int, int>>;

// One nontrivial factor of a composite n by the elliptic curve method, or 0
// when max_curves curves find none. Curves run with a growing B1; a few
// hundred reach factors of about 70 bits.
Int ecm_split(const Int& n, int max_curves);

// Complete factorization of m >= 1, primes ascending.
IntFactorization full_factor(const Int& m, const OracleBudget& budget = {});

// One nontrivial factor of an odd composite n by Brent-Pollard rho, or 0 on failure.
Int pollard_rho(const Int& n, uint64_t max_iterations, unsigned long c = 1);

// x with base^x = target, 0 <= x < order.
Int bsgs_log(const TowerField& K, const TowerElement& base, const TowerElement& target,
             const Int& order, const OracleBudget& budget = {});

// Number of monic b-smooth polynomials of degree d over F_{p^k}.
Int brute_smooth_count(const Int& p, int k, int b, int d, const OracleBudget& budget = {});

// Number of coprime pairs of monic polynomials of degrees d1, d2 over F_{p^k}, both b-smooth.
Int brute_smooth_pair_count(const Int& p, int k, int b, int d1, int d2,
                            const OracleBudget& budget = {});

// Minimal x-degree of u*T over all nonzero u in F_{p^d}.
int brute_subfield_multiple(const FieldTower& T, const TowerElement& target, int d,
                            const OracleBudget& budget = {});

} // namespace subsplit
