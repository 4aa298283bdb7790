#include "subsplit/factor.hpp"
#include "subsplit/error.hpp"

#include <algorithm>
#include <cstdint>

namespace subsplit {

namespace {

FqPoly pth_root(const PolyRing& R, const FqPoly& f)
{
    const BaseField& F = R.field();
    long p = F.p().get_si();
    Int e = F.order() / F.p();  // a^(q/p) is the p-th root of a
    FqPoly r;
    for (size_t i = 0; i < f.c.size(); i += p)
        r.c.push_back(F.pow(f.c[i], e));
    R.normalize(r);
    return r;
}

void sqf_rec(const PolyRing& R, const FqPoly& f, int mult, FactorList& out)
{
    if (f.degree() <= 0)
        return;
    FqPoly df = R.derivative(f);
    if (df.is_zero()) {
        long p = R.field().p().get_si();
        sqf_rec(R, pth_root(R, f), mult * static_cast<int>(p), out);
        return;
    }
    FqPoly c = R.gcd(f, df);
    FqPoly w = R.quo(f, c);
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = R.gcd(w, c);
        FqPoly z = R.quo(w, y);
        if (z.degree() > 0)
            out.emplace_back(R.monic(z), i * mult);
        ++i;
        w = y;
        c = R.quo(c, y);
    }
    if (c.degree() > 0) {
        long p = R.field().p().get_si();
        sqf_rec(R, pth_root(R, c), mult * static_cast<int>(p), out);
    }
}

struct SplitMix {
    uint64_t s;
    uint64_t next()
    {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

Fe random_fe(const BaseField& F, SplitMix& rng)
{
    Fe r(F.degree());
    for (int i = 0; i < F.degree(); ++i) {
        Int v(static_cast<unsigned long>(rng.next()));
        v <<= 64;
        v += Int(static_cast<unsigned long>(rng.next()));
        r[i] = mod(v, F.p());
    }
    return r;
}

void edf_rec(const PolyRing& R, const FqPoly& f, int d, SplitMix& rng, const Int& half_exp,
             std::vector<FqPoly>& out)
{
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const BaseField& F = R.field();
    bool even = F.p() == 2;
    long qbits = F.degree();
    for (;;) {
        FqPoly a;
        for (int i = 0; i < f.degree(); ++i)
            a.c.push_back(random_fe(F, rng));
        R.normalize(a);
        if (a.degree() <= 0)
            continue;
        FqPoly b;
        if (even) {
            // Absolute trace to F_2: a + a^2 + ... + a^(2^(k d - 1)).
            FqPoly t = a, acc = a;
            for (long i = 1; i < qbits * d; ++i) {
                t = R.mulmod(t, t, f);
                acc = R.add(acc, t);
            }
            b = acc;
        } else {
            b = R.sub(R.powmod(a, half_exp, f), R.one());
        }
        FqPoly g = R.gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_rec(R, g, d, rng, half_exp, out);
            edf_rec(R, R.quo(f, g), d, rng, half_exp, out);
            return;
        }
    }
}

} // namespace

void sort_factors(const PolyRing& R, FactorList& fl)
{
    std::sort(fl.begin(), fl.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first)
            return R.less(a.first, b.first);
        return a.second < b.second;
    });
    // Merge equal factors coming from different squarefree layers.
    FactorList merged;
    for (auto& e : fl) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    fl = std::move(merged);
}

FactorList squarefree_decomposition(const PolyRing& R, const FqPoly& f)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "squarefree decomposition of zero");
    FactorList out;
    sqf_rec(R, R.monic(f), 1, out);
    return out;
}

FactorList distinct_degree(const PolyRing& R, const FqPoly& f, int max_degree, FqPoly* rest)
{
    FactorList out;
    const Int q = R.field().order();
    FqPoly g = f;
    FqPoly X = R.x();
    FqPoly h = R.rem(X, g);
    for (int i = 1; g.degree() >= 2 * i; ++i) {
        if (max_degree > 0 && i > max_degree)
            break;
        h = R.powmod(h, q, g);
        FqPoly s = R.gcd(g, R.sub(h, X));
        if (s.degree() > 0) {
            out.emplace_back(s, i);
            g = R.quo(g, s);
            h = R.rem(h, g);
        }
    }
    if (g.degree() > 0) {
        // What is left is irreducible when its degree is below twice the last slice.
        bool certain = max_degree <= 0 || 2 * (max_degree + 1) > g.degree() ||
                       g.degree() <= max_degree;
        if (certain && (max_degree <= 0 || g.degree() <= max_degree)) {
            out.emplace_back(g, g.degree());
            g = R.one();
        }
    }
    if (rest)
        *rest = g.degree() > 0 ? g : R.one();
    return out;
}

std::vector<FqPoly> equal_degree(const PolyRing& R, const FqPoly& f, int d)
{
    std::vector<FqPoly> out;
    if (f.degree() <= 0)
        return out;
    SplitMix rng{0x243f6a8885a308d3ULL ^ static_cast<uint64_t>(f.degree()) * 0x9e37ULL};
    Int half_exp = (pow(R.field().order(), static_cast<unsigned long>(d)) - 1) / 2;
    edf_rec(R, f, d, rng, half_exp, out);
    return out;
}

FactorList factor_fq(const PolyRing& R, const FqPoly& f)
{
    FactorList out;
    for (auto& [part, mult] : squarefree_decomposition(R, f)) {
        for (auto& [slice, deg] : distinct_degree(R, part)) {
            for (auto& irr : equal_degree(R, slice, deg))
                out.emplace_back(R.monic(irr), mult);
        }
    }
    sort_factors(R, out);
    return out;
}

bool is_irreducible(const PolyRing& R, const FqPoly& f)
{
    int n = f.degree();
    if (n <= 0)
        return false;
    if (n == 1)
        return true;
    FqPoly g = R.monic(f);
    const Int q = R.field().order();
    FqPoly X = R.x();
    FqPoly h = R.rem(X, g);
    for (int i = 1; 2 * i <= n; ++i) {
        h = R.powmod(h, q, g);
        if (R.gcd(g, R.sub(h, X)).degree() > 0)
            return false;
    }
    return true;
}

std::vector<Fe> roots(const PolyRing& R, const FqPoly& f)
{
    std::vector<Fe> out;
    if (f.degree() <= 0)
        return out;
    FqPoly g = R.monic(f);
    FqPoly X = R.x();
    FqPoly lin = R.gcd(g, R.sub(R.powmod(X, R.field().order(), g), X));
    for (auto& fac : equal_degree(R, lin, 1))
        out.push_back(R.field().neg(R.monic(fac).c[0]));
    const BaseField& F = R.field();
    std::sort(out.begin(), out.end(),
              [&](const Fe& a, const Fe& b) { return F.index(a) < F.index(b); });
    return out;
}

SmoothVerdict poly_smooth_test(const PolyRing& R, const FqPoly& f, int b, SmoothMode mode)
{
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, "smoothness test of zero");
    SmoothVerdict v;
    v.rough = R.one();
    if (f.degree() <= 0) {
        v.smooth = true;
        v.complete = true;
        return v;
    }
    struct Slice {
        FqPoly poly;
        int deg;
        int mult;
    };
    std::vector<Slice> slices;
    std::vector<std::pair<FqPoly, int>> rough_parts;
    for (auto& [part, mult] : squarefree_decomposition(R, f)) {
        FqPoly rest;
        int cap = mode == SmoothMode::Full ? 0 : b;
        for (auto& [slice, deg] : distinct_degree(R, part, cap, &rest))
            slices.push_back({slice, deg, mult});
        if (rest.degree() > 0)
            rough_parts.emplace_back(rest, mult);
    }
    v.smooth = rough_parts.empty();
    for (const auto& s : slices) {
        if (s.deg > b)
            v.smooth = false;
        v.largest_degree = std::max(v.largest_degree, s.deg);
    }
    if (!rough_parts.empty())
        v.largest_degree = std::max(v.largest_degree, b + 1);
    if (!v.smooth && mode == SmoothMode::Verdict)
        return v;
    for (const auto& s : slices)
        for (auto& irr : equal_degree(R, s.poly, s.deg))
            v.factors.emplace_back(R.monic(irr), s.mult);
    for (auto& [r, m] : rough_parts) {
        FqPoly pw = R.one();
        for (int i = 0; i < m; ++i)
            pw = R.mul(pw, r);
        v.rough = R.mul(v.rough, pw);
    }
    v.complete = rough_parts.empty();
    sort_factors(R, v.factors);
    return v;
}

FqPoly smallest_irreducible(const PolyRing& R, int degree)
{
    if (degree < 1)
        throw Error(Errc::BadParameters, "irreducible search needs degree >= 1");
    const BaseField& F = R.field();
    const Int q = F.order();
    // digits[i] is the index of the coefficient of x^i; digit 0 is most significant.
    std::vector<Int> digits(degree, Int(0));
    // Above degree 1 a zero constant term means x divides f, so start past those.
    if (degree > 1)
        digits[0] = 1;
    for (;;) {
        FqPoly f;
        for (int i = 0; i < degree; ++i)
            f.c.push_back(F.from_index(digits[i]));
        f.c.push_back(F.one());
        if ((degree == 1 || !F.is_zero(f.c[0])) && is_irreducible(R, f))
            return f;
        int pos = degree - 1;
        while (pos >= 0) {
            digits[pos] += 1;
            if (digits[pos] < q)
                break;
            digits[pos] = 0;
            --pos;
        }
        if (pos < 0)
            throw Error(Errc::NotIrreducible, "no irreducible polynomial found");
    }
}

} // namespace subsplit
