#include "doctest.h"

#include "subsplit/error.hpp"
#include "subsplit/oracle.hpp"
#include "subsplit/probability.hpp"

#include <cmath>

using namespace subsplit;

namespace {

double single(long p, int k, int b, int d)
{
    SmoothProbQuery q;
    q.q = {Int(p), k};
    q.b = b;
    q.d = d;
    return smooth_prob_log2(q);
}

double paired(long p, int k, int b, int d1, int d2)
{
    SmoothProbQuery q;
    q.q = {Int(p), k};
    q.b = b;
    q.d = d1;
    q.paired = d2;
    return smooth_prob_log2(q);
}

} // namespace

TEST_CASE("irreducible counts")
{
    CHECK(irreducible_count(Int(2), 1) == 2);
    CHECK(irreducible_count(Int(2), 2) == 1);
    CHECK(irreducible_count(Int(3), 4) == 18);
    CHECK(irreducible_count(Int(2), 4) == 3);
    CHECK(irreducible_count(Int(729), 1) == 729);
}

TEST_CASE("smooth counts against enumeration")
{
    CHECK(smooth_count(Int(3), 1, 2) == 6);
    CHECK(smooth_count(Int(2), 1, 0) == 1);
    for (int d = 1; d <= 12; ++d)
        CHECK(smooth_count(Int(2), d, d) == pow(Int(2), d));

    struct Q { long p; int k; };
    for (Q q : {Q{2, 1}, Q{3, 1}, Q{2, 2}, Q{5, 1}}) {
        Int qv = pow(Int(q.p), q.k);
        for (int d = 1; d <= 6; ++d)
            for (int b = 1; b <= d; ++b) {
                INFO("q = ", to_string(qv), ", b = ", b, ", d = ", d);
                CHECK(smooth_count(qv, b, d) == brute_smooth_count(Int(q.p), q.k, b, d));
            }
    }
}

TEST_CASE("counts over all factorization patterns")
{
    for (long q : {2L, 3L, 4L})
        for (int d = 1; d <= 8; ++d) {
            CHECK(smooth_count(Int(q), d, d) == pow(Int(q), d));
            CHECK(smooth_count(Int(q), d + 3, d) == pow(Int(q), d));
        }
}

TEST_CASE("monotone in b and consistent with the table")
{
    SmoothCountTable t(Int(9), 12, 30);
    for (int d = 1; d <= 30; ++d) {
        for (int b = 2; b <= 12; ++b)
            CHECK(t.count(b - 1, d) <= t.count(b, d));
        CHECK(t.count(5, d) == smooth_count(Int(9), 5, d));
    }
    CHECK(t.log2_prob(12, 12) == doctest::Approx(0.0));
    CHECK(single(3, 1, 4, 4) == doctest::Approx(0.0));
    CHECK(single(3, 1, 9, 4) == doctest::Approx(0.0));
}

TEST_CASE("paired approximation against coprime pair counts")
{
    for (long q : {2L, 3L}) {
        Int brute = brute_smooth_pair_count(Int(q), 1, 2, 4, 4);
        Int n = smooth_count(Int(q), 2, 4);
        double approx = (1.0 - 1.0 / q) * n.get_d() * n.get_d();
        double ratio = approx / brute.get_d();
        INFO("q = ", q, ", ratio = ", ratio);
        CHECK(ratio <= 1.25);
        CHECK(ratio >= 1 / 1.25);
    }
}

// Reference values from an independent generating-function count in Python.
TEST_CASE("frozen log2 probabilities")
{
    CHECK(std::abs(single(3, 6, 22, 254) + 42.177539) < 2e-6);
    CHECK(std::abs(single(3, 6, 28, 254) + 29.523274) < 2e-6);
    CHECK(std::abs(single(3, 6, 43, 254) + 14.991316) < 2e-6);
    CHECK(std::abs(paired(3, 6, 22, 254, 254) + 84.357058) < 2e-6);
    CHECK(std::abs(paired(3, 6, 28, 254, 254) + 59.048528) < 2e-6);
    CHECK(std::abs(paired(3, 6, 43, 254, 254) + 29.984613) < 2e-6);
    CHECK(std::abs(single(3, 5, 24, 383) + 67.502267) < 2e-6);
    CHECK(std::abs(paired(3, 5, 24, 239, 239) + 67.801963) < 2e-6);
    CHECK(std::abs(single(3, 5, 50, 383) + 22.923154) < 2e-6);

    SmoothCountTable t(Int(729), 43, 254);
    CHECK(std::abs(paired_log2(t, 28, 254, 254) - paired(3, 6, 28, 254, 254)) < 1e-9);
}

TEST_CASE("printed smoothness probability rows")
{
    CHECK(std::abs(single(3, 6, 28, 254) - (-29.6)) <= 0.05);
    CHECK(std::abs(paired(3, 6, 43, 254, 254) - (-30.1)) <= 0.05);
    CHECK(std::abs(single(3, 5, 50, 383) - (-22.96)) <= 0.05);
}

TEST_CASE("L-notation")
{
    const double ln2 = std::log(2.0);
    double lnQ = 768 * ln2;
    CHECK(l_eval({0.0, 1.5, 768}) == doctest::Approx(1.5 * std::log(lnQ) / ln2).epsilon(1e-12));
    CHECK(l_eval({1.0, 1.5, 768}) == doctest::Approx(1.5 * 768).epsilon(1e-12));
    // 50-digit reference from mpmath.
    CHECK(l_eval({1.0 / 3, 1.923, 768}) == doctest::Approx(76.512120277741589).epsilon(1e-12));
    CHECK(l_eval({1.0 / 3, 1.0, 1024}) > l_eval({1.0 / 3, 1.0, 768}));
    CHECK_THROWS_AS(l_eval({0.5, 1.0, 1.0}), Error);
}
