#pragma once

#include "subsplit/factor.hpp"
#include "subsplit/subfield.hpp"
#include "subsplit/tower.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace subsplit {

struct SubfieldBasis {
    int d = 0;
    int d_prime = 0;
    int scalar_degree = 1;   // gcd(n1, d)
    Int exponent;            // U = (g r)^exponent
    Int multiplier_index;    // index of r; 0 when g itself worked
    TowerElement U;
    std::vector<TowerElement> powers;  // U^0 .. U^(d'-1)
    ScalarSubfield scalars;
};

// n2 - ceil(d / n1).
int degree_bound(int n1, int n2, int d);

// Number of consecutive rows sharing one x-degree, n1 / gcd(d, n1).
int row_group_size(int n1, int d);

SubfieldBasis subfield_basis(const FieldTower& T, int d);

// Rows U^i T expanded over F_{p^k}; column i*m + j holds the y^j part of the x^i coefficient.
using ScalarRow = std::vector<Fe>;

struct EchelonMatrix {
    std::vector<ScalarRow> rows;
    std::vector<int> right_pivot;  // pivot column found by the right-to-left pass
    int width = 1;                 // m
};

// Right-to-left pass: the last row is reduced first and every pivot is made 1.
EchelonMatrix right_echelon(const FieldTower& T, const SubfieldBasis& basis, const TowerElement& target);

FqPoly row_to_poly(const FieldTower& T, const SubfieldBasis& basis, const ScalarRow& row);

// Degree reduction: a polynomial of degree <= n2 - ceil(d/n1) equal to u*T, u in F_{p^d}.
FqPoly reduce_degree(const FieldTower& T, const TowerElement& target, const SubfieldBasis& basis,
                     bool check_subfield = true);

struct SubfieldCandidate {
    int row = -1;          // source row, -1 for combinations
    int e = 0;             // rho(x^e P) = u T
    FqPoly P;
    int slack = 0;         // deg P minus the degree bound
    bool swapped = false;  // row moved by a pivot swap in the second pass
    ScalarRow vec;         // the row itself, x^e P expanded
    std::vector<int> sources;
};

std::vector<SubfieldCandidate> double_echelon_candidates(const FieldTower& T, const TowerElement& target,
                                                         const SubfieldBasis& basis,
                                                         bool check_subfield = true);

// Scalar combinations of neighbouring rows, at most max_count of them, each of
// degree at most bound + max_extra_degree.
std::vector<SubfieldCandidate> expand_candidates(const FieldTower& T, const SubfieldBasis& basis,
                                                 const std::vector<SubfieldCandidate>& rows,
                                                 int max_extra_degree, size_t max_count);

// Waterloo: T = U/V mod psi with small U, V.
std::pair<FqPoly, FqPoly> waterloo_split(const FieldTower& T, const TowerElement& target);

enum class SplitStrategy { Subfield, SubfieldDouble, SubfieldDoubleExpand, Waterloo };

const char* strategy_name(SplitStrategy s);
std::optional<SplitStrategy> parse_strategy(const std::string& s);

struct SplitConfig {
    int B1 = 1;
    SplitStrategy strategy = SplitStrategy::Subfield;
    uint64_t seed = 0;
    uint64_t max_trials = 1000;
    int workers = 1;
    int d = 0;               // 0 picks the largest proper divisor of n
    int max_extra_degree = 2;
    size_t expand_max = 64;
};

struct SplitResult {
    Int t;
    FqPoly P;
    int e = 0;
    int row = -1;
    int candidate_index = 0;
    int slack = 0;
    FactorList factors;
    FqPoly V;                 // Waterloo denominator
    FactorList v_factors;
    bool subfield_unit_checked = false;
    uint64_t trials_used = 0;
};

int largest_proper_divisor(int n);

// Randomized search over g^t T0. Throws BudgetExhausted when max_trials runs out.
SplitResult initial_split_search(const FieldTower& T, const TowerElement& T0, const SplitConfig& config);

} // namespace subsplit
