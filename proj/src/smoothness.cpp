#include "subsplit/smoothness.hpp"
#include "subsplit/error.hpp"
#include "subsplit/probability.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace subsplit {

namespace {

constexpr unsigned long kSieveLimit = 1UL << 20;

const std::vector<unsigned long>& sieve_primes()
{
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kSieveLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kSieveLimit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kSieveLimit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

struct Accumulator {
    std::map<Int, int> primes;
    Int smooth = 1;
    Int cofactor = 1;

    void take(const Int& q, int e = 1)
    {
        primes[q] += e;
        for (int i = 0; i < e; ++i)
            smooth *= q;
    }
};

// Trial division by primes up to min(B, limit). Returns true when the
// remaining n is known to be 1 or a prime (recorded into acc).
bool trial_divide(Int& n, const Int& B, unsigned long limit, Accumulator& acc)
{
    unsigned long top = limit;
    if (B.fits_ulong_p())
        top = std::min(top, B.get_ui());
    if (n.fits_ulong_p()) {
        unsigned long v = n.get_ui();
        for (unsigned long q : sieve_primes()) {
            if (q > top)
                break;
            if (q * q > v)
                break;
            while (v % q == 0) {
                v /= q;
                acc.take(Int(q));
            }
        }
        n = Int(v);
    } else {
        for (unsigned long q : sieve_primes()) {
            if (q > top)
                break;
            while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
                acc.take(Int(q));
            }
            if (n < Int(q) * q)
                break;
        }
    }
    if (n == 1)
        return true;
    // n has no prime factor up to the last prime tried.
    Int last = Int(std::min<unsigned long>(top, sieve_primes().back()));
    if (n <= last * last) {
        if (n <= B)
            acc.take(n);
        else
            acc.cofactor *= n;
        n = 1;
        return true;
    }
    return false;
}

void absorb_full(const Int& n, const Int& B, Accumulator& acc)
{
    for (const auto& [q, e] : full_factor(n)) {
        if (q <= B)
            acc.take(q, e);
        else
            for (int i = 0; i < e; ++i)
                acc.cofactor *= q;
    }
}

// Splits n with a short rho run, then up to `curves` ECM curves. Parts that
// resist both stay in the cofactor.
void rho_extract(const Int& n, const Int& B, uint64_t iters, int curves, Accumulator& acc)
{
    if (n == 1)
        return;
    if (n <= B) {
        absorb_full(n, B, acc);
        return;
    }
    if (is_probable_prime(n)) {
        acc.cofactor *= n;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = bit_length(n); e >= 2; --e) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                Accumulator sub;
                rho_extract(root, B, iters, curves, sub);
                for (const auto& [q, m] : sub.primes)
                    acc.take(q, m * static_cast<int>(e));
                for (unsigned long i = 0; i < e; ++i)
                    acc.cofactor *= sub.cofactor;
                return;
            }
        }
    }
    Int f = pollard_rho(n, iters, 1);
    if (f == 0)
        f = ecm_split(n, curves);
    if (f != 0) {
        rho_extract(f, B, iters, curves, acc);
        rho_extract(n / f, B, iters, curves, acc);
        return;
    }
    acc.cofactor *= n;
}

SmoothSplit finish(Accumulator& acc)
{
    SmoothSplit s;
    s.smooth = acc.smooth;
    s.cofactor = acc.cofactor;
    s.factors.assign(acc.primes.begin(), acc.primes.end());
    return s;
}

} // namespace

const char* backend_name(SmoothBackend b)
{
    return b == SmoothBackend::TrialDivision ? "trial-division" : "rho-assisted";
}

std::optional<SmoothBackend> parse_backend(const std::string& s)
{
    if (s == "trial-division")
        return SmoothBackend::TrialDivision;
    if (s == "rho-assisted")
        return SmoothBackend::RhoAssisted;
    return std::nullopt;
}

SmoothSplit smooth_part(const Int& m, const Int& B, SmoothBackend backend)
{
    if (m < 1)
        throw Error(Errc::DomainError, "smooth_part needs m >= 1");
    Accumulator acc;
    Int n = m;
    if (B < 2) {
        acc.cofactor = m;
        return finish(acc);
    }
    if (trial_divide(n, B, kSieveLimit, acc))
        return finish(acc);
    if (Int(kSieveLimit) >= B) {
        acc.cofactor *= n;
        return finish(acc);
    }
    if (backend == SmoothBackend::TrialDivision) {
        if (n <= B)
            absorb_full(n, B, acc);
        else if (is_probable_prime(n))
            acc.cofactor *= n;
        else
            absorb_full(n, B, acc);
    } else {
        int bits = static_cast<int>(bit_length(B));
        rho_extract(n, B, uint64_t(1) << 16, std::clamp(2 * bits, 16, 160), acc);
    }
    if (acc.smooth * acc.cofactor != m)
        throw Error(Errc::DomainError, "smooth_part lost a factor");
    return finish(acc);
}

Int bits_bound(int bits)
{
    if (bits < 0)
        throw Error(Errc::BadParameters, "negative bit bound");
    return (Int(1) << (bits + 1)) - 1;
}

void EasParams::validate() const
{
    if (k < 0 || theta.size() != static_cast<size_t>(k + 1) || b.size() != static_cast<size_t>(k + 1))
        throw Error(Errc::BadParameters, "EAS arrays must have k+1 entries");
    if (theta.back() != 1)
        throw Error(Errc::BadParameters, "theta_k must be 1");
    Rational sum = 0;
    for (int i = 0; i <= k; ++i) {
        if (theta[i] <= 0 || (i > 0 && theta[i - 1] >= theta[i]))
            throw Error(Errc::BadParameters, "theta must be positive and increasing");
        if (b[i] <= 0 || b[i] > 1)
            throw Error(Errc::BadParameters, "b_i must lie in (0, 1]");
        sum += b[i];
    }
    if (sum != 1)
        throw Error(Errc::BadParameters, "b must sum to 1");
    if (B1 < 2)
        throw Error(Errc::BadParameters, "B1 must be at least 2");
}

Int EasParams::stage_bound(int i) const
{
    if (i >= k || theta[i] == 1)
        return B1;
    double l = theta[i].get_d() * log2_abs(B1);
    if (l < 62) {
        Int r(static_cast<unsigned long>(std::floor(std::exp2(l))));
        return std::max(r, Int(1));
    }
    // Large bounds: 2^floor(l) scaled by the fractional part.
    double whole = std::floor(l);
    Int r(static_cast<unsigned long>(std::floor(std::exp2(l - whole + 52))));
    long shift = static_cast<long>(whole) - 52;
    return shift >= 0 ? Int(r << shift) : Int(r >> -shift);
}

EasParams plain_params(const Int& B1)
{
    EasParams p;
    p.k = 0;
    p.theta = {Rational(1)};
    p.b = {Rational(1)};
    p.B1 = B1;
    return p;
}

bool exceeds_power(const Int& a, const Int& m, const Rational& s)
{
    if (s < 0 || s > 1)
        throw Error(Errc::DomainError, "exponent out of range");
    Rational e = 1 - s;
    e.canonicalize();
    const Int& num = e.get_num();
    const Int& den = e.get_den();
    if (num == 0)
        return a > 1;
    // a > m^(num/den)  <=>  a^den > m^num, when the powers stay small.
    double cost = den.get_d() * log2_abs(a) + num.get_d() * log2_abs(m);
    if (cost < 1 << 22) {
        Int lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), a.get_mpz_t(), den.get_ui());
        mpz_pow_ui(rhs.get_mpz_t(), m.get_mpz_t(), num.get_ui());
        return lhs > rhs;
    }
    // Certified comparison of den*log2(a) and num*log2(m) with directed rounding.
    for (mpfr_prec_t prec = 128; prec <= 1 << 16; prec *= 4) {
        mpfr_t la_lo, la_hi, lm_lo, lm_hi, fa, fm;
        mpfr_inits2(prec, la_lo, la_hi, lm_lo, lm_hi, fa, fm, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_z(fa, a.get_mpz_t(), MPFR_RNDD);
        mpfr_log2(la_lo, fa, MPFR_RNDD);
        mpfr_set_z(fa, a.get_mpz_t(), MPFR_RNDU);
        mpfr_log2(la_hi, fa, MPFR_RNDU);
        mpfr_set_z(fm, m.get_mpz_t(), MPFR_RNDD);
        mpfr_log2(lm_lo, fm, MPFR_RNDD);
        mpfr_set_z(fm, m.get_mpz_t(), MPFR_RNDU);
        mpfr_log2(lm_hi, fm, MPFR_RNDU);
        mpfr_mul_z(la_lo, la_lo, den.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(la_hi, la_hi, den.get_mpz_t(), MPFR_RNDU);
        mpfr_mul_z(lm_lo, lm_lo, num.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(lm_hi, lm_hi, num.get_mpz_t(), MPFR_RNDU);
        int verdict = -1;
        if (mpfr_cmp(la_lo, lm_hi) > 0)
            verdict = 1;
        else if (mpfr_cmp(la_hi, lm_lo) <= 0 && mpfr_cmp(la_hi, lm_lo) < 0)
            verdict = 0;
        mpfr_clears(la_lo, la_hi, lm_lo, lm_hi, fa, fm, static_cast<mpfr_ptr>(nullptr));
        if (verdict >= 0)
            return verdict == 1;
    }
    Int lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), a.get_mpz_t(), den.get_ui());
    mpz_pow_ui(rhs.get_mpz_t(), m.get_mpz_t(), num.get_ui());
    return lhs > rhs;
}

SmoothnessOutcome k_eas(const Int& m, const EasParams& params, SmoothBackend backend)
{
    params.validate();
    if (m < 1)
        throw Error(Errc::DomainError, "k_eas needs m >= 1");
    SmoothnessOutcome out;
    std::map<Int, int> primes;
    Int cur = m;
    Rational spent = 0;
    int i = 0;
    for (;;) {
        SmoothSplit s = smooth_part(cur, params.stage_bound(i), backend);
        out.parts.push_back(s.smooth);
        for (const auto& [q, e] : s.factors)
            primes[q] += e;
        cur = s.cofactor;
        spent += params.b[i];
        ++i;
        if (i > params.k || cur == 1)
            break;
        if (exceeds_power(cur, m, spent)) {
            out.verdict = Verdict::Aborted;
            out.stage = i;
            out.residual = cur;
            return out;
        }
    }
    out.stage = i;
    out.residual = cur;
    if (cur != 1) {
        out.verdict = Verdict::NotSmooth;
        return out;
    }
    Int check = 1;
    for (const auto& [q, e] : primes) {
        if (q > params.B1)
            throw Error(Errc::DomainError, "smooth verdict with a prime above B1");
        for (int j = 0; j < e; ++j)
            check *= q;
    }
    if (check != m)
        throw Error(Errc::DomainError, "smooth verdict does not reconstitute m");
    out.verdict = Verdict::Smooth;
    out.factors.assign(primes.begin(), primes.end());
    return out;
}

SmoothnessOutcome eas(const Int& m, const Int& B1, const Rational& theta, const Rational& b,
                      SmoothBackend backend)
{
    EasParams p;
    p.k = 1;
    p.theta = {theta, Rational(1)};
    p.b = {b, Rational(1) - b};
    p.B1 = B1;
    return k_eas(m, p, backend);
}

EasDesign eas_params(int k, double e, double log2_Q)
{
    if (k < 0 || !(e > 0))
        throw Error(Errc::BadParameters, "eas_params needs k >= 0 and e > 0");
    EasDesign D;
    EasParams& P = D.params;
    P.k = k;
    Rational r = 1;
    for (int i = 0; i < k; ++i)
        r *= Rational(8, 27);
    Rational scale = Rational(19) / (15 + 4 * r);
    P.theta.resize(k + 1);
    P.b.resize(k + 1);
    Rational rest = 1;
    for (int i = 0; i <= k; ++i) {
        Rational th = 1, bi = 1;
        for (int j = i; j < k; ++j) {
            th *= Rational(4, 9);
            bi *= Rational(8, 27);
        }
        P.theta[i] = th;
        if (i < k) {
            P.b[i] = bi * scale;
            P.b[i].canonicalize();
            rest -= P.b[i];
        }
    }
    rest.canonicalize();
    P.b[k] = rest;
    double rr = r.get_d();
    D.c = std::cbrt(3 * e) * std::pow((15 + 4 * rr) / 19, 2.0 / 3.0);
    D.gamma = e / D.c;
    if (log2_Q > 0) {
        D.B1_log2 = l_eval({2.0 / 3.0, D.gamma, log2_Q});
        D.time_log2 = l_eval({1.0 / 3.0, D.c, log2_Q});
        double bl = std::min(D.B1_log2, 4096.0);
        P.B1 = Int(1) << static_cast<unsigned long>(std::max(1.0, std::floor(bl)));
    }
    return D;
}

double ecm_cost_log2(double e, double log2_Q) { return l_eval({1.0 / 3.0, std::cbrt(3 * e), log2_Q}); }

double k_eas_cost_log2(int k, double e, double log2_Q) { return eas_params(k, e, log2_Q).time_log2; }

} // namespace subsplit
