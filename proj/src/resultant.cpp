#include "subsplit/resultant.hpp"
#include "subsplit/error.hpp"

#include <utility>

namespace subsplit {

namespace {

struct IntRing {
    using T = Int;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T exact_div(const T& a, const T& b) const
    {
        T q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

struct ZyRing {
    using T = IntPoly;
    T zero() const { return {}; }
    T one() const { return {Int(1)}; }
    bool is_zero(const T& a) const { return a.empty(); }
    T add(const T& a, const T& b) const { return ipoly::add(a, b); }
    T sub(const T& a, const T& b) const { return ipoly::sub(a, b); }
    T mul(const T& a, const T& b) const { return ipoly::mul(a, b); }
    T neg(const T& a) const { return ipoly::neg(a); }
    T exact_div(const T& a, const T& b) const { return ipoly::exact_div(a, b); }
};

template <class Ring>
using RPoly = std::vector<typename Ring::T>;

template <class Ring>
void rnormalize(const Ring& R, RPoly<Ring>& a)
{
    while (!a.empty() && R.is_zero(a.back()))
        a.pop_back();
}

template <class Ring>
typename Ring::T rpow(const Ring& R, typename Ring::T a, long e)
{
    typename Ring::T r = R.one();
    while (e > 0) {
        if (e & 1)
            r = R.mul(r, a);
        e >>= 1;
        if (e)
            a = R.mul(a, a);
    }
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, with no divisions.
template <class Ring>
RPoly<Ring> prem(const Ring& R, RPoly<Ring> a, const RPoly<Ring>& b)
{
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    int e = da - db + 1;
    const auto& lb = b.back();
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int top = static_cast<int>(a.size()) - 1;
        typename Ring::T c = a.back();
        for (auto& v : a)
            v = R.mul(v, lb);
        int s = top - db;
        for (int i = 0; i <= db; ++i)
            a[s + i] = R.sub(a[s + i], R.mul(c, b[i]));
        rnormalize(R, a);
        --e;
    }
    if (e > 0) {
        typename Ring::T f = rpow(R, lb, e);
        for (auto& v : a)
            v = R.mul(v, f);
    }
    return a;
}

template <class Ring>
typename Ring::T subresultant(const Ring& R, RPoly<Ring> A, RPoly<Ring> B)
{
    rnormalize(R, A);
    rnormalize(R, B);
    if (A.empty() || B.empty())
        return R.zero();
    auto deg = [](const RPoly<Ring>& p) { return static_cast<long>(p.size()) - 1; };
    typename Ring::T g = R.one(), h = R.one();
    bool negate = false;
    if (deg(A) < deg(B)) {
        std::swap(A, B);
        if ((deg(A) & 1) && (deg(B) & 1))
            negate = true;
    }
    if (deg(B) == 0) {
        typename Ring::T r = rpow(R, B[0], deg(A));
        return negate ? R.neg(r) : r;
    }
    for (;;) {
        long delta = deg(A) - deg(B);
        if ((deg(A) & 1) && (deg(B) & 1))
            negate = !negate;
        RPoly<Ring> Rm = prem(R, A, B);
        A = std::move(B);
        typename Ring::T div = R.mul(g, rpow(R, h, delta));
        B.clear();
        for (const auto& v : Rm)
            B.push_back(R.exact_div(v, div));
        g = A.back();
        if (delta == 0) {
            // h stays unchanged: h^(1-0) g^0 = h.
        } else {
            h = R.exact_div(rpow(R, g, delta), rpow(R, h, delta - 1));
        }
        if (B.empty())
            return R.zero();
        if (deg(B) == 0) {
            long da = deg(A);
            typename Ring::T r = R.exact_div(rpow(R, B[0], da), rpow(R, h, da - 1));
            return negate ? R.neg(r) : r;
        }
    }
}

} // namespace

Int resultant(const IntPoly& a, const IntPoly& b)
{
    IntRing R;
    IntPoly A = a, B = b;
    ipoly::normalize(A);
    ipoly::normalize(B);
    if (A.empty() || B.empty())
        throw Error(Errc::ZeroPolynomial, "resultant with the zero polynomial");
    return subresultant(R, A, B);
}

IntPoly resultant_x(const IntBiPoly& P, const IntPoly& f)
{
    ZyRing R;
    IntBiPoly Pn = P;
    normalize(Pn);
    IntPoly fn = f;
    ipoly::normalize(fn);
    if (Pn.is_zero() || fn.empty())
        throw Error(Errc::ZeroPolynomial, "resultant with the zero polynomial");
    std::vector<IntPoly> A = Pn.c, B;
    for (const auto& c : fn)
        B.push_back(c == 0 ? IntPoly{} : IntPoly{c});
    return subresultant(R, A, B);
}

Int resultant_int(const IntBiPoly& P, const IntPoly& f, const IntPoly& h)
{
    IntPoly hn = h;
    ipoly::normalize(hn);
    IntPoly rx = resultant_x(P, f);
    if (hn.size() <= 2) {
        if (hn.size() == 2) {
            // Linear h: Res_y(r, a + b y) = b^deg r * r(-a/b) up to sign; keep the general path.
            if (rx.empty())
                return 0;
            return resultant(rx, hn);
        }
        if (ipoly::degree(rx) > 0)
            throw Error(Errc::DomainError, "P depends on y but no h was given");
        return rx.empty() ? Int(0) : rx[0];
    }
    if (rx.empty())
        return 0;
    if (rx.size() == 1)
        return pow(rx[0], static_cast<unsigned long>(ipoly::degree(hn)));
    return resultant(rx, hn);
}

} // namespace subsplit
