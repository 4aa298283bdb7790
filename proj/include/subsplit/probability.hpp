#pragma once

#include "subsplit/bigint.hpp"

#include <optional>
#include <vector>

namespace subsplit {

struct PrimePower {
    Int p;
    int k = 1;
    Int value() const { return pow(p, static_cast<unsigned long>(k)); }
};

struct SmoothProbQuery {
    PrimePower q;
    int d = 0;
    int b = 1;
    std::optional<int> paired;  // second degree d2
};

// Number of monic irreducible polynomials of degree k over F_q.
Int irreducible_count(const Int& q, int k);

// N_q(b; d), the number of monic b-smooth polynomials of degree d.
Int smooth_count(const Int& q, int b, int d);

// All N_q(b; e) for 1 <= b <= b_max and 0 <= e <= d_max from one table.
class SmoothCountTable {
public:
    SmoothCountTable(Int q, int b_max, int d_max);
    const Int& count(int b, int d) const { return table_[b][d]; }
    double log2_prob(int b, int d) const;
    const Int& q() const { return q_; }
    int b_max() const { return b_max_; }
    int d_max() const { return d_max_; }

private:
    Int q_;
    int b_max_, d_max_;
    std::vector<std::vector<Int>> table_;  // table_[b][d]
};

double smooth_prob_log2(const SmoothProbQuery& query);

// log2((1 - 1/q) Pr(b; d1) Pr(b; d2)) from a precomputed table.
double paired_log2(const SmoothCountTable& t, int b, int d1, int d2);

struct LParams {
    double alpha = 0;
    double c = 1;
    double log2_Q = 0;
};

// log2 of L_Q[alpha, c] with the o(1) term set to zero. An estimate, not a bound.
double l_eval(const LParams& params);

} // namespace subsplit
