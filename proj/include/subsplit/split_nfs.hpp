#pragma once

#include "subsplit/int_poly.hpp"
#include "subsplit/lattice.hpp"
#include "subsplit/oracle.hpp"
#include "subsplit/smoothness.hpp"
#include "subsplit/split_small.hpp"
#include "subsplit/tower.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subsplit {

// Rows of the polynomial selection table: degrees and coefficient sizes of
// f0 and f1. Sizes are exponents of Q (log2 ||f|| = e * log2 Q) except for
// the "log p" entries, which are stored as tiny = true.
struct FamilyMetadata {
    std::string name;
    bool tower = false;
    int deg_f0 = 0, deg_f1 = 0;
    double norm_exp0 = 0, norm_exp1 = 0;
    bool tiny0 = false, tiny1 = false;
};

// n = n1*n2; D is the free degree parameter, deg_px the degree of p_x for
// the Joux-Pierrot families, n3 the extra factor of n used by Sarkar-Singh.
std::optional<FamilyMetadata> family_metadata(const std::string& family, int n1, int n2, int D = 0,
                                              int deg_px = 2, int n3 = 1);
std::vector<std::string> family_names();

struct NfsPolySpec {
    int side = 0;
    IntPoly f;               // may be empty when only metadata is known
    std::string family;      // empty for a custom polynomial
    int deg_f = 0;
    double norm_log2 = 0;    // log2 ||f||_inf, from f or from the family row

    static NfsPolySpec from_poly(int side, IntPoly f, std::string family = {});
    static NfsPolySpec from_family(const FamilyMetadata& m, int side, double log2_Q, const Int& p);
};

// psi must divide f mod (p, h); throws BadParameters otherwise.
void check_poly_spec(const FieldTower& T, const NfsPolySpec& spec);

// F_p row echelon of the d vectors z^a U^i T: rows are processed from the
// last one up, pivots taken from the right and scaled to 1.
std::vector<std::vector<Int>> fp_right_echelon(const FieldTower& T, const SubfieldBasis& basis,
                                               const TowerElement& target);

// Basis of the lattice of preimages of F_{p^d}-multiples of T of x-degree <= deg_P.
IntMatrix build_alg5_lattice(const FieldTower& T, const TowerElement& target,
                             const SubfieldBasis& basis, int deg_P);

// 64-bit FNV-1a over the decimal entries, as 16 hex digits.
std::string matrix_fingerprint(const IntMatrix& M);

IntBiPoly row_to_bipoly(const std::vector<Int>& row, int n1);
TowerElement bipoly_image(const TowerField& K, const IntBiPoly& P);

// log2 of C * Q^((1 - d/n) / ((deg_P + 1) n1)).
double coefficient_bound_log2(const FieldTower& T, int d, int deg_P, const LllParams& lll = {});

struct PrimeIdeal {
    Int prime;
    Int root;          // ideal <prime, x + root>
    int multiplicity = 0;
};

// Degree-one prime ideals above each prime of the pseudonorm, read off
// gcd(P mod q, f mod q). NFS case only (P independent of y).
std::vector<PrimeIdeal> ideal_factorization(const IntBiPoly& P, const IntPoly& f,
                                            const IntFactorization& norm_factors);

struct NfsSplitConfig {
    int d = 0;
    int deg_P = 0;
    EasParams eas;
    SmoothBackend backend = SmoothBackend::RhoAssisted;
    uint64_t seed = 0;
    uint64_t max_trials = 1000;
    int workers = 1;
    LllParams lll;
    std::optional<Int> fixed_t;  // a single trial at this exponent
};

struct NfsSplitResult {
    Int t;
    IntBiPoly P;
    int row = 0;
    Int pseudonorm;
    IntFactorization factors;
    std::vector<PrimeIdeal> ideals;
    bool coeff_bound_ok = false;
    double coeff_log2 = 0;
    double bound_log2 = 0;
    std::string fingerprint;
    uint64_t trials_used = 0;
};

// The per-trial work: lattice, LLL, then every reduced row in order.
struct NfsTrial {
    IntMatrix lattice;
    IntMatrix reduced;
    std::vector<IntBiPoly> rows;
    std::vector<Int> pseudonorms;
    std::vector<bool> bound_ok;
};

NfsTrial nfs_trial(const FieldTower& T, const TowerElement& target, const SubfieldBasis& basis,
                   const NfsPolySpec& spec, int deg_P, const LllParams& lll = {});

NfsSplitResult split_nfs_search(const FieldTower& T, const TowerElement& T0, const NfsPolySpec& spec,
                                const NfsSplitConfig& config);

struct PseudonormBound {
    double estimate_log2 = 0;      // ||f||^(n1 deg_P) Q^((1-d/n) deg f/(deg_P+1))
    double kalkbrener_log2 = 0;    // kappa(deg f, deg_P) ||f||^deg_P ||P||^deg f
    double factorial_log2 = 0;     // (deg f + deg_P)! ||f||^deg_P ||P||^deg f
    double tower_log2 = 0;         // tower bound including D(n1, deg f)
    double combinatorial_log2 = 0; // log2 D(n1, deg f)
    double coeff_log2 = 0;         // the bound used for ||P||
};

PseudonormBound pseudonorm_bound(const NfsPolySpec& spec, int deg_P, const FieldTower& T, int d,
                                 const LllParams& lll = {}, double h_norm_log2 = 0);

// log2 of kappa(n, m) = C(n+m, n) C(n+m-1, n).
double kappa_log2(int n, int m);
// log2 of D(d1, d2).
double tower_combinatorial_log2(int d1, int d2);

struct Advice {
    int side = 0;
    int deg_P = 0;
    double log2_norm = 0;            // objective without the combinatorial factor
    double log2_norm_with_D = 0;     // same point with D(n1, deg f) added
    int side_with_D = 0;             // argmin when D is included
    int deg_P_with_D = 0;
};

// Minimises the objective over both sides and the admissible degrees.
Advice degree_advisor(const NfsPolySpec& f0, const NfsPolySpec& f1, const FieldTower& T, int d);
Advice degree_advisor(const NfsPolySpec& f0, const NfsPolySpec& f1, int n1, int n2, double log2_Q, int d);

struct Fp6Solution {
    Int u0, u1, v0, w;
    IntPoly P;  // monic of degree 2, coefficients in [0, p)
};

// All (u0, u1, v0) with the x^3, x^4, x^5 coefficients of
// (u0 + u1 U + U^2)(v0 + V) T vanishing, in increasing order of v0 then u1.
std::vector<Fp6Solution> fp6_compress_all(const FieldTower& T, const TowerElement& target);
// The first solution; throws NoSolution when there is none.
Fp6Solution fp6_compress(const FieldTower& T, const TowerElement& target);

struct Fp6Lattice {
    IntMatrix basis;
    IntMatrix reduced;
    std::vector<IntPoly> rows;  // every reduced row as a polynomial
    IntPoly R;                  // the row of least infinity norm, first on ties
};

Fp6Lattice fp6_degree2_lattice(const IntPoly& P, const Int& p, const LllParams& lll = {});

struct Fp6SearchConfig {
    int B1_bits = 64;
    SmoothBackend backend = SmoothBackend::RhoAssisted;
    uint64_t seed = 0;
    uint64_t max_trials = 100;
    int workers = 1;
    std::optional<Int> fixed_t;
};

struct Fp6SearchResult {
    Int t;
    Fp6Solution solution;
    IntPoly R;
    int row = 0;
    Int pseudonorm;
    IntFactorization factors;
    std::vector<PrimeIdeal> ideals;
    uint64_t trials_used = 0;
};

Fp6SearchResult fp6_search(const FieldTower& T, const TowerElement& T0, const IntPoly& f,
                           const Fp6SearchConfig& config);

} // namespace subsplit
