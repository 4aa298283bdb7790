#pragma once

#include "subsplit/fq_poly.hpp"

#include <utility>
#include <vector>

namespace subsplit {

using FactorList = std::vector<std::pair<FqPoly, int>>;

// Monic irreducible factors with multiplicities, sorted by degree then by
// coefficients from the constant term up.
FactorList factor_fq(const PolyRing& R, const FqPoly& f);

// Squarefree decomposition of a nonzero polynomial, monic parts.
FactorList squarefree_decomposition(const PolyRing& R, const FqPoly& f);

// Distinct-degree split of a monic squarefree polynomial: (product of all
// irreducible factors of degree i, i). Stops after max_degree when positive;
// the part left over is returned through rest.
FactorList distinct_degree(const PolyRing& R, const FqPoly& f, int max_degree = 0,
                           FqPoly* rest = nullptr);

// Splits a monic squarefree product of irreducibles of degree d.
std::vector<FqPoly> equal_degree(const PolyRing& R, const FqPoly& f, int d);

bool is_irreducible(const PolyRing& R, const FqPoly& f);

// Distinct roots in F_q sorted by index.
std::vector<Fe> roots(const PolyRing& R, const FqPoly& f);

enum class SmoothMode {
    Verdict,  // factor only when smooth
    Partial,  // factor the part below the bound, leave the rough cofactor whole
    Full,     // complete factorization in every case
};

struct SmoothVerdict {
    bool smooth = false;
    FactorList factors;   // irreducible factors found (all of them when complete)
    FqPoly rough;         // product of unfactored factors of degree > b (1 when complete)
    bool complete = false;
    int largest_degree = 0;
};

SmoothVerdict poly_smooth_test(const PolyRing& R, const FqPoly& f, int b,
                               SmoothMode mode = SmoothMode::Partial);

// Smallest monic irreducible polynomial of the given degree, enumerating
// coefficients 0,1,...,q-1 with the constant term most significant.
FqPoly smallest_irreducible(const PolyRing& R, int degree);

void sort_factors(const PolyRing& R, FactorList& fl);

} // namespace subsplit
