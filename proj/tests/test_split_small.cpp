#include "doctest.h"
#include "support.hpp"

#include "subsplit/error.hpp"
#include "subsplit/oracle.hpp"
#include "subsplit/split_small.hpp"

#include <set>

using namespace subsplit;
using namespace testing;

namespace {

// (rho(x^e P) / T)^(p^d - 1) = 1
bool subfield_unit(const FieldTower& T, const FqPoly& P, int e, const TowerElement& target, int d)
{
    TowerElement u = T.K.div(T.K.from_poly(T.K.ring().shift(P, e)), target);
    return T.K.is_one(T.K.pow(u, pow(T.p(), static_cast<unsigned long>(d)) - 1));
}

} // namespace

TEST_CASE("degree bound and row groups")
{
    CHECK(degree_bound(6, 509, 1527) == 254);
    CHECK(row_group_size(6, 1527) == 2);
    CHECK(degree_bound(5, 479, 479) == 383);
    CHECK(row_group_size(5, 479) == 5);
    CHECK(degree_bound(1, 6, 3) == 3);
    CHECK(degree_bound(1, 12, 6) == 12 / 2);
    CHECK(largest_proper_divisor(12) == 6);
    CHECK(largest_proper_divisor(7) == 1);
}

TEST_CASE("Example 1 subfield element is the norm to F_{p^3}")
{
    json fx = fixture("example1");
    FieldTower T = fixture_tower(fx);
    SubfieldBasis B = subfield_basis(T, 3);
    CHECK(B.d_prime == 3);
    CHECK(B.multiplier_index == 0);
    Int p3 = pow(T.p(), 3);
    CHECK(B.U == T.K.pow(T.g, p3 + 1));
    CHECK(T.K.is_one(T.K.pow(B.U, p3 - 1)));
    REQUIRE(B.powers.size() == 3);
    CHECK(B.powers[2] == T.K.mul(B.U, B.U));
}

TEST_CASE("subfield basis needs a multiplier when g is not primitive")
{
    // Here g^((p^24-1)/(p^3-1)) lands in F_5, so a multiplier outside F_25 is required.
    FieldTower T = small_tower(5, 2, 12);
    SubfieldBasis B = subfield_basis(T, 3);
    CHECK(B.d_prime == 3);
    CHECK(B.multiplier_index != 0);
    Int p3 = pow(T.p(), 3);
    CHECK(T.K.pow(B.U, p3) == B.U);
    CHECK(T.K.pow(B.U, T.p()) != B.U);
    CounterRng rng(44, 0);
    TowerElement target = random_generic(T, rng);
    FqPoly P = reduce_degree(T, target, B);
    CHECK(P.degree() <= degree_bound(2, 12, 3));
    CHECK(same_log_class(T, T.K.from_poly(P), target));
}

TEST_CASE("subfield basis spans the subfield")
{
    FieldTower T = small_tower(2, 1, 6);
    SubfieldBasis B = subfield_basis(T, 3);
    std::set<Int> span, sub;
    for (int mask = 0; mask < 8; ++mask) {
        TowerElement a = T.K.zero();
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1)
                a = T.K.add(a, B.powers[i]);
        span.insert(T.K.index(a));
    }
    for (int idx = 0; idx < 64; ++idx) {
        TowerElement a = T.K.from_index(Int(idx));
        if (T.K.pow(a, Int(8)) == a)
            sub.insert(Int(idx));
    }
    CHECK(sub.size() == 8);
    CHECK(span == sub);

    FieldTower T2 = small_tower(3, 2, 3);
    SubfieldBasis B2 = subfield_basis(T2, 2);
    CHECK(B2.d_prime == 1);
    REQUIRE(B2.powers.size() == 1);
    CHECK(T2.K.is_one(B2.powers[0]));
    CHECK_THROWS_AS(subfield_basis(T2, 4), Error);
}

TEST_CASE("reduce_degree on F_{2^12} with d = 6")
{
    FieldTower T = small_tower(2, 1, 12);
    SubfieldBasis B = subfield_basis(T, 6);
    CounterRng rng(21, 0);
    int attained = 0;
    for (int i = 0; i < 40; ++i) {
        TowerElement target = random_generic(T, rng);
        FqPoly P = reduce_degree(T, target, B);
        CHECK(P.degree() <= 6);
        CHECK(subfield_unit(T, P, 0, target, 6));
        int best = brute_subfield_multiple(T, target, 6);
        CHECK(best <= 6);
        CHECK(P.degree() >= best);
        attained += P.degree() == best;
    }
    MESSAGE("reduce_degree attained the oracle minimum on ", attained, " of 40 targets");

    TowerElement low = T.K.from_poly(T.K.ring().from_ints(ints({1, 1, 0, 1})));
    if (!in_proper_subfield(T, low))
        CHECK(reduce_degree(T, low, B).degree() <= 3);

    TowerElement one = T.K.one();
    try {
        reduce_degree(T, one, B);
        FAIL("subfield target accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TargetInSubfield);
    }
}

TEST_CASE("double echelon candidates")
{
    FieldTower T = small_tower(3, 2, 6);
    SubfieldBasis B = subfield_basis(T, 6);
    CHECK(B.d_prime == 3);
    CHECK(B.scalar_degree == 2);
    CounterRng rng(22, 0);
    int bound = degree_bound(2, 6, 6);
    for (int i = 0; i < 20; ++i) {
        TowerElement target = random_generic(T, rng);
        auto cands = double_echelon_candidates(T, target, B);
        REQUIRE(cands.size() == 3);
        for (const auto& c : cands) {
            CHECK(subfield_unit(T, c.P, c.e, target, 6));
            CHECK(c.slack == c.P.degree() - bound);
            CHECK(c.slack <= 2);
        }
    }

    FieldTower T1 = small_tower(5, 1, 4);
    SubfieldBasis B1 = subfield_basis(T1, 2);
    CHECK(B1.d_prime == 2);
    FieldTower T3 = small_tower(3, 2, 3);
    SubfieldBasis B3 = subfield_basis(T3, 2);
    TowerElement target = random_generic(T3, rng);
    auto single = double_echelon_candidates(T3, target, B3);
    REQUIRE(single.size() == 1);
    CHECK(single[0].P == reduce_degree(T3, target, B3));
}

TEST_CASE("surrogate with the n1 = 6 shape")
{
    // Same gcd pattern as the degree-509 configuration: d/n1 not integral, row groups of 2.
    FieldSpec s;
    s.p = 3;
    s.n1 = 6;
    s.n2 = 5;
    s.h = ints({2, 2, 1, 0, 2, 0, 1});
    FieldTower T = tower_from_spec(s);
    SubfieldBasis B = subfield_basis(T, 15);
    CHECK(B.d_prime == 5);
    CHECK(row_group_size(6, 15) == 2);
    CounterRng rng(23, 0);
    for (int i = 0; i < 3; ++i) {
        TowerElement target = random_generic(T, rng);
        auto cands = double_echelon_candidates(T, target, B);
        CHECK(cands.size() == 5);
        for (const auto& c : cands)
            CHECK(subfield_unit(T, c.P, c.e, target, 15));
        CHECK(reduce_degree(T, target, B).degree() <= degree_bound(6, 5, 15));
    }
}

TEST_CASE("expanded candidates stay in the log class")
{
    FieldTower T = small_tower(3, 2, 6);
    SubfieldBasis B = subfield_basis(T, 6);
    CounterRng rng(24, 0);
    int bound = degree_bound(2, 6, 6);
    int seen = 0;
    for (int i = 0; i < 10 && seen < 100; ++i) {
        TowerElement target = random_generic(T, rng);
        auto rows = double_echelon_candidates(T, target, B);
        CHECK(expand_candidates(T, B, rows, 2, 0).empty());
        for (const auto& c : expand_candidates(T, B, rows, 2, 64)) {
            CHECK(subfield_unit(T, c.P, c.e, target, 6));
            CHECK(c.P.degree() <= bound + 2);
            ++seen;
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("Waterloo split")
{
    FieldTower T = small_tower(3, 1, 12);
    CounterRng rng(25, 0);
    int v_at_half = 0;
    for (int i = 0; i < 200; ++i) {
        TowerElement a = random_nonzero(T.K, rng);
        auto [U, V] = waterloo_split(T, a);
        CHECK(T.K.mul(a, T.K.from_poly(V)) == T.K.from_poly(U));
        CHECK(U.degree() <= 5);
        CHECK(V.degree() <= 6);
        v_at_half += V.degree() == 6;
    }
    MESSAGE("deg V = n2/2 on ", v_at_half, " of 200 targets");

    TowerElement small = T.K.from_poly(T.K.ring().from_ints(ints({2, 0, 1, 1})));
    auto [U, V] = waterloo_split(T, small);
    CHECK(U == T.K.to_poly(small));
    CHECK(T.K.ring().is_one(V));

    FieldTower odd = small_tower(3, 1, 11);
    for (int i = 0; i < 100; ++i) {
        TowerElement a = random_nonzero(odd.K, rng);
        auto [U2, V2] = waterloo_split(odd, a);
        CHECK(odd.K.mul(a, odd.K.from_poly(V2)) == odd.K.from_poly(U2));
        CHECK(U2.degree() <= 5);
        CHECK(V2.degree() <= 5);
    }
}

TEST_CASE("initial split search")
{
    FieldTower T = small_tower(3, 1, 12);
    CounterRng rng(26, 0);
    TowerElement T0 = random_generic(T, rng);

    SplitConfig all;
    all.B1 = 12;
    all.d = 6;
    all.seed = 5;
    SplitResult r = initial_split_search(T, T0, all);
    CHECK(r.trials_used == 1);
    CHECK(r.subfield_unit_checked);

    for (auto strategy : {SplitStrategy::Subfield, SplitStrategy::SubfieldDouble,
                          SplitStrategy::SubfieldDoubleExpand, SplitStrategy::Waterloo}) {
        SplitConfig c;
        c.B1 = 2;
        c.d = 6;
        c.seed = 77;
        c.max_trials = 5000;
        c.strategy = strategy;
        SplitResult a = initial_split_search(T, T0, c);
        INFO(strategy_name(strategy));
        CHECK(a.subfield_unit_checked);
        CHECK(a.t >= 1);
        CHECK(a.t < T.ell);
        TowerElement target = T.K.mul(T.K.pow(T.g, a.t), T0);
        if (strategy == SplitStrategy::Waterloo) {
            CHECK(T.K.mul(target, T.K.from_poly(a.V)) == T.K.from_poly(a.P));
        } else {
            CHECK(subfield_unit(T, a.P, a.e, target, 6));
            CHECK(same_log_class(T, T.K.from_poly(T.K.ring().shift(a.P, a.e)), target));
            CHECK(a.P.degree() <= degree_bound(1, 12, 6) + a.slack);
        }
        for (const auto& [f, e] : a.factors)
            CHECK(f.degree() <= 2);
        c.workers = 4;
        SplitResult b = initial_split_search(T, T0, c);
        CHECK(b.t == a.t);
        CHECK(b.P == a.P);
        CHECK(b.trials_used == a.trials_used);
    }

    SplitConfig none;
    none.B1 = 1;
    none.d = 2;
    none.seed = 3;
    none.max_trials = 3;
    try {
        initial_split_search(T, T0, none);
        FAIL("search should run out of trials");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExhausted);
    }
}
