#include "doctest.h"
#include "support.hpp"

#include "subsplit/error.hpp"
#include "subsplit/lattice.hpp"
#include "subsplit/resultant.hpp"
#include "subsplit/split_nfs.hpp"

#include <cmath>

using namespace subsplit;
using namespace testing;

namespace {

IntPoly lift_modulus(const FieldTower& T)
{
    IntPoly f;
    for (const auto& c : T.K.modulus().c)
        f.push_back(c[0]);
    return f;
}

IntFactorization factors_from(const json& j)
{
    IntFactorization out;
    for (const auto& e : j)
        out.emplace_back(parse_int(e.at(0).get<std::string>()), e.at(1).get<int>());
    return out;
}

double coeff_log2(const IntBiPoly& P) { return log2_abs(max_norm(P)); }

} // namespace

TEST_CASE("Example 1 echelon matrix and lattice")
{
    json fx = fixture("example1");
    FieldTower T = fixture_tower(fx);
    TowerElement target = fixture_target(T, fx);
    SubfieldBasis B = subfield_basis(T, 3);

    auto M = fp_right_echelon(T, B, target);
    const json& printed = fx.at("M");
    REQUIRE(M.size() == printed.size());
    for (size_t i = 0; i < M.size(); ++i) {
        REQUIRE(M[i].size() == printed[i].size());
        for (size_t j = 0; j < M[i].size(); ++j)
            CHECK(to_string(M[i][j]) == printed[i][j].get<std::string>());
    }

    IntMatrix N = build_alg5_lattice(T, target, B, 5);
    CHECK(matrix_fingerprint(N) == "71ff53c1b4857268");
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 6; ++j)
            CHECK(N(i, j) == (i == j ? T.p() : Int(0)));

    IntPoly P = int_poly_from_json(fx.at("P"));
    CHECK(lattice_membership(N, P).member);
    IntBiPoly Pb = bi_from_univariate(P);
    CHECK(same_log_class(T, bipoly_image(T.K, Pb), target));

    double bound = coefficient_bound_log2(T, 3, 5);
    CHECK(coeff_log2(Pb) == doctest::Approx(41.82).epsilon(0.0005));
    CHECK(coeff_log2(Pb) <= bound);

    IntPoly f0 = int_poly_from_json(fx.at("f0"));
    auto ideals = ideal_factorization(Pb, f0, factors_from(fx.at("factors")));
    const json& want = fx.at("ideals");
    REQUIRE(ideals.size() == want.size());
    for (size_t i = 0; i < ideals.size(); ++i) {
        CHECK(to_string(ideals[i].prime) == want[i].at("prime").get<std::string>());
        CHECK(to_string(ideals[i].root) == want[i].at("root").get<std::string>());
        CHECK(ideals[i].multiplicity == want[i].at("multiplicity").get<int>());
    }
}

TEST_CASE("Example 1 trial reproduces the printed row")
{
    json fx = fixture("example1");
    FieldTower T = fixture_tower(fx);
    TowerElement target = fixture_target(T, fx);
    SubfieldBasis B = subfield_basis(T, 3);
    NfsPolySpec spec = poly_spec_from_json(json{{"f", fx.at("f0")}, {"family", "JLSV1"}});
    check_poly_spec(T, spec);
    NfsTrial trial = nfs_trial(T, target, B, spec, 5);
    REQUIRE(trial.rows.size() == 6);
    CHECK(trial.rows[3] == bi_from_univariate(int_poly_from_json(fx.at("P"))));
    CHECK(to_string(trial.pseudonorms[3]) == fx.at("pseudonorm").get<std::string>());
    for (size_t i = 0; i < trial.rows.size(); ++i) {
        CHECK(trial.bound_ok[i]);
        CHECK(same_log_class(T, bipoly_image(T.K, trial.rows[i]), target));
    }
}

TEST_CASE("pseudonorm bounds")
{
    json fx = fixture("example1");
    FieldTower T = fixture_tower(fx);
    double logQ = log2_abs(T.K.order());
    auto meta = family_metadata("JLSV1", 1, 6);
    REQUIRE(meta);
    NfsPolySpec fam = NfsPolySpec::from_family(*meta, 0, logQ, T.p());
    PseudonormBound b = pseudonorm_bound(fam, 5, T, 3);
    CHECK(b.estimate_log2 == doctest::Approx(logQ * 11 / 12).epsilon(1e-9));
    CHECK(std::abs(b.estimate_log2 - 466) < 1);

    NfsPolySpec real = NfsPolySpec::from_poly(0, int_poly_from_json(fx.at("f0")));
    PseudonormBound full = pseudonorm_bound(real, 5, T, 3);
    double realized = log2_abs(parse_int(fx.at("pseudonorm").get<std::string>()));
    CHECK(realized > 470);
    CHECK(realized < 471);
    CHECK(realized <= full.kalkbrener_log2);
    CHECK(realized <= full.factorial_log2);

    PseudonormBound fp6 = pseudonorm_bound(fam, 2, T, 4);
    CHECK(fp6.estimate_log2 == doctest::Approx(logQ * 5 / 6).epsilon(1e-9));
    CHECK(std::abs(fp6.estimate_log2 - 423) < 1.5);

    PseudonormBound degenerate = pseudonorm_bound(fam, 5, T, 6);
    CHECK(degenerate.estimate_log2 == doctest::Approx(5 * fam.norm_log2).epsilon(1e-12));

    CHECK(kappa_log2(6, 5) == doctest::Approx(std::log2(462.0 * 210.0)).epsilon(1e-12));
}

TEST_CASE("degree advisor")
{
    double logQ = 508.3;
    auto jl = family_metadata("JLSV1", 1, 6);
    Advice a = degree_advisor(NfsPolySpec::from_family(*jl, 0, logQ, Int(1) << 84),
                              NfsPolySpec::from_family(*jl, 1, logQ, Int(1) << 84), 1, 6, logQ, 3);
    CHECK(a.side == 0);
    CHECK(a.deg_P == 5);
    CHECK(a.log2_norm == doctest::Approx(logQ * (1.5 - 0.5 - 1.0 / 12)).epsilon(1e-9));

    auto gjl = family_metadata("GJL", 1, 6, 6);
    REQUIRE(gjl);
    NfsPolySpec g0 = NfsPolySpec::from_family(*gjl, 0, logQ, Int(1) << 84);
    Advice g = degree_advisor(g0, NfsPolySpec::from_family(*gjl, 1, logQ, Int(1) << 84), 1, 6, logQ, 3);
    CHECK(g.side == 0);
    CHECK(g.deg_P == g0.deg_f - 1);
    CHECK(g.log2_norm == doctest::Approx(logQ * 0.5 + g.deg_P * g0.norm_log2).epsilon(1e-9));
}

TEST_CASE("lattice determinant on desk-scale instances")
{
    CounterRng rng(31, 0);
    struct Shape { long p; int n1, n2, d; };
    int count = 0;
    for (Shape s : {Shape{1031, 1, 6, 3}, Shape{1033, 1, 6, 2}, Shape{1039, 1, 4, 2}, Shape{67, 2, 3, 2},
                    Shape{71, 2, 3, 3}}) {
        FieldTower T = small_tower(s.p, s.n1, s.n2);
        SubfieldBasis B = subfield_basis(T, s.d);
        int lo = s.n2 - s.d / s.n1;
        for (int i = 0; i < 10; ++i, ++count) {
            TowerElement target = random_generic(T, rng);
            int deg_P = lo + i % 3;
            INFO("p = ", s.p, ", n1 = ", s.n1, ", d = ", s.d, ", deg_P = ", deg_P);
            IntMatrix N = build_alg5_lattice(T, target, B, deg_P);
            CHECK(N.rows() == static_cast<size_t>(s.n1 * (deg_P + 1)));
            CHECK(abs(determinant(N)) == pow(T.p(), static_cast<unsigned long>(s.n1 * s.n2 - s.d)));
            IntMatrix R = lll_reduce(N);
            for (size_t r = 0; r < R.rows(); ++r) {
                TowerElement image = bipoly_image(T.K, row_to_bipoly(R.row(r), s.n1));
                if (!T.K.is_zero(image))
                    CHECK(same_log_class(T, image, target));
                else
                    CHECK(deg_P >= s.n2);
            }
        }
    }
    CHECK(count == 50);

    FieldTower T = small_tower(1031, 1, 6);
    SubfieldBasis B = subfield_basis(T, 3);
    TowerElement target = random_generic(T, rng);
    CHECK_THROWS_AS(build_alg5_lattice(T, target, B, 1), Error);

    SubfieldBasis B1 = subfield_basis(T, 1);
    IntMatrix N = build_alg5_lattice(T, target, B1, 5);
    CHECK(determinant(N) == pow(T.p(), 5));
}

TEST_CASE("split_nfs_search on a tiny field")
{
    FieldTower T = small_tower(1031, 1, 6);
    CounterRng rng(32, 0);
    TowerElement T0 = random_generic(T, rng);
    NfsPolySpec spec = NfsPolySpec::from_poly(0, lift_modulus(T));
    check_poly_spec(T, spec);

    NfsSplitConfig c;
    c.d = 3;
    c.deg_P = 5;
    c.eas = plain_params(Int(1) << 20);
    c.backend = SmoothBackend::TrialDivision;
    c.seed = 9;
    c.max_trials = 2000;
    NfsSplitResult r = split_nfs_search(T, T0, spec, c);
    TowerElement target = T.K.mul(T.K.pow(T.g, r.t), T0);
    CHECK(same_log_class(T, bipoly_image(T.K, r.P), target));
    CHECK(r.pseudonorm == resultant_int(r.P, spec.f));
    Int prod = 1;
    for (const auto& [q, e] : r.factors) {
        CHECK(q <= (Int(1) << 20));
        CHECK(is_probable_prime(q));
        for (int i = 0; i < e; ++i)
            prod *= q;
    }
    CHECK(prod == abs(r.pseudonorm));
    CHECK(r.coeff_bound_ok);
    CHECK(r.coeff_log2 <= r.bound_log2);

    c.workers = 4;
    NfsSplitResult r4 = split_nfs_search(T, T0, spec, c);
    CHECK(r4.t == r.t);
    CHECK(r4.P == r.P);
    CHECK(r4.row == r.row);
    CHECK(r4.fingerprint == r.fingerprint);

    NfsSplitConfig big = c;
    big.workers = 1;
    big.eas = plain_params(Int(1) << 400);
    CHECK(split_nfs_search(T, T0, spec, big).trials_used == 1);
}

TEST_CASE("Example 3 compression")
{
    json fx = fixture("example3");
    FieldTower T = fixture_tower(fx);
    TowerElement target = fixture_target(T, fx);
    auto sols = fp6_compress_all(T, target);
    REQUIRE(sols.size() == 1);
    Fp6Solution s = fp6_compress(T, target);
    const json& want = fx.at("solution");
    CHECK(to_string(s.u0) == want.at("u0").get<std::string>());
    CHECK(to_string(s.u1) == want.at("u1").get<std::string>());
    CHECK(to_string(s.v0) == want.at("v0").get<std::string>());
    CHECK(to_string(s.w) == want.at("w").get<std::string>());
    CHECK(s.P == int_poly_from_json(want.at("P")));

    const Int& p = T.p();
    SubfieldBasis B = subfield_basis(T, 3);
    TowerElement U = T.K.pow(T.g, p * p * p + 1);
    TowerElement V = T.K.pow(T.g, 1 + p * p + p * p * p * p);
    CHECK(U == B.U);
    TowerElement u = T.K.add(T.K.add(T.K.embed(T.K.base().from_int(s.u0)),
                                     T.K.scale(U, T.K.base().from_int(s.u1))),
                             T.K.mul(U, U));
    TowerElement v = T.K.add(T.K.embed(T.K.base().from_int(s.v0)), V);
    TowerElement prod = T.K.mul(T.K.mul(u, v), target);
    for (int i = 3; i < 6; ++i)
        CHECK(T.K.base().is_zero(prod.c[i]));
    TowerElement P = T.K.scale(prod, T.K.base().from_int(s.w));
    CHECK(P == bipoly_image(T.K, bi_from_univariate(s.P)));
    CHECK(same_log_class(T, P, target));

    Fp6Lattice L = fp6_degree2_lattice(s.P, p);
    IntPoly R = int_poly_from_json(fx.at("R"));
    CHECK(lattice_membership(L.basis, R).member);
    CHECK(log2_abs(ipoly::max_norm(R)) <= 57.6);
    CHECK(L.rows[2] == R);
}

TEST_CASE("degree-2 lattice")
{
    Fp6Lattice z = fp6_degree2_lattice(ints({0, 0, 1}), Int(1009));
    CHECK(z.R == ints({0, 0, 1}));

    CounterRng rng(33, 0);
    Int p = parse_int("1152921504606847009");
    for (int i = 0; i < 20; ++i) {
        IntPoly P = {rng.below(p), rng.below(p), Int(1)};
        Fp6Lattice L = fp6_degree2_lattice(P, p);
        for (const IntPoly& row : L.rows) {
            // row = c * P mod p with c the x^2 coefficient
            IntPoly r = row;
            r.resize(3, Int(0));
            for (int j = 0; j < 3; ++j)
                CHECK(mod(r[j] - r[2] * P[j], p) == 0);
        }
        CHECK(log2_abs(ipoly::max_norm(L.R)) <= lll_log2_factor({}, 3) + log2_abs(p) * 2 / 3 + 1e-9);
    }
}

TEST_CASE("compression on a toy field")
{
    FieldTower T = small_tower(1009, 1, 6);
    CounterRng rng(34, 0);
    int hits = 0;
    for (int i = 0; i < 1000; ++i) {
        TowerElement target = random_generic(T, rng);
        for (const Fp6Solution& s : fp6_compress_all(T, target)) {
            CHECK(same_log_class(T, bipoly_image(T.K, bi_from_univariate(s.P)), target));
            CHECK(s.P.size() <= 3);
            ++hits;
        }
    }
    MESSAGE(hits, " solutions over 1000 targets");
    CHECK(hits > 0);
}
