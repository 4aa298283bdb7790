#include "subsplit/probability.hpp"
#include "subsplit/error.hpp"

#include <cmath>

namespace subsplit {

Int irreducible_count(const Int& q, int k)
{
    if (k < 1)
        throw Error(Errc::BadParameters, "irreducible_count needs k >= 1");
    Int sum = 0;
    for (long e : divisors(k)) {
        int mu = moebius(e);
        if (mu == 0)
            continue;
        Int t = pow(q, static_cast<unsigned long>(k / e));
        sum += mu > 0 ? t : Int(-t);
    }
    return sum / k;
}

SmoothCountTable::SmoothCountTable(Int q, int b_max, int d_max)
    : q_(std::move(q)), b_max_(b_max), d_max_(d_max)
{
    if (b_max < 1 || d_max < 0)
        throw Error(Errc::BadParameters, "need b_max >= 1 and d_max >= 0");
    // cur[e] = coefficient of z^e in prod_{k <= b} (1 - z^k)^(-I_k).
    std::vector<Int> cur(d_max + 1, Int(0));
    cur[0] = 1;
    table_.assign(b_max + 1, {});
    table_[0] = cur;
    for (int k = 1; k <= b_max; ++k) {
        if (k <= d_max) {
            Int I = irreducible_count(q_, k);
            // Multiplying by (1 - z^k)^(-I) = sum_j C(I + j - 1, j) z^(jk).
            int jmax = d_max / k;
            std::vector<Int> coef(jmax + 1);
            coef[0] = 1;
            for (int j = 1; j <= jmax; ++j)
                coef[j] = coef[j - 1] * (I + j - 1) / j;
            std::vector<Int> next(d_max + 1, Int(0));
            for (int e = 0; e <= d_max; ++e) {
                if (cur[e] == 0)
                    continue;
                for (int j = 0; e + j * k <= d_max; ++j)
                    mpz_addmul(next[e + j * k].get_mpz_t(), cur[e].get_mpz_t(), coef[j].get_mpz_t());
            }
            cur = std::move(next);
        }
        table_[k] = cur;
    }
}

double SmoothCountTable::log2_prob(int b, int d) const
{
    if (b > b_max_ || d > d_max_ || b < 1 || d < 0)
        throw Error(Errc::BadParameters, "query outside the table");
    return log2_rational(Rational(table_[b][d], pow(q_, static_cast<unsigned long>(d))));
}

Int smooth_count(const Int& q, int b, int d)
{
    if (b < 1 || d < 0)
        throw Error(Errc::BadParameters, "need b >= 1 and d >= 0");
    if (b >= d)
        return pow(q, static_cast<unsigned long>(d));
    return SmoothCountTable(q, b, d).count(b, d);
}

double paired_log2(const SmoothCountTable& t, int b, int d1, int d2)
{
    const Int& q = t.q();
    Rational prob(t.count(b, d1) * t.count(b, d2) * (q - 1),
                  pow(q, static_cast<unsigned long>(d1 + d2 + 1)));
    prob.canonicalize();
    return log2_rational(prob);
}

double smooth_prob_log2(const SmoothProbQuery& query)
{
    Int q = query.q.value();
    if (q < 2 || query.b < 1)
        throw Error(Errc::BadParameters, "invalid smoothness query");
    int dmax = query.d;
    if (query.paired)
        dmax = std::max(dmax, *query.paired);
    int bmax = std::min(query.b, std::max(dmax, 1));
    SmoothCountTable t(q, bmax, dmax);
    if (query.paired)
        return paired_log2(t, bmax, query.d, *query.paired);
    return t.log2_prob(bmax, query.d);
}

double l_eval(const LParams& params)
{
    double lnQ = params.log2_Q * std::log(2.0);
    if (!(lnQ > 0) || std::log(lnQ) <= 0)
        throw Error(Errc::DomainError, "L-notation needs log log Q > 0");
    double lnlnQ = std::log(lnQ);
    double v = params.c * std::pow(lnQ, params.alpha) * std::pow(lnlnQ, 1.0 - params.alpha);
    return v / std::log(2.0);
}

} // namespace subsplit
