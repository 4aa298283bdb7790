#include "subsplit/fq_poly.hpp"
#include "subsplit/error.hpp"

namespace subsplit {

void PolyRing::normalize(FqPoly& a) const
{
    while (!a.c.empty() && F_.is_zero(a.c.back()))
        a.c.pop_back();
}

FqPoly PolyRing::x() const { return monomial(F_.one(), 1); }

FqPoly PolyRing::constant(const Fe& c) const
{
    FqPoly r;
    if (!F_.is_zero(c))
        r.c.push_back(c);
    return r;
}

FqPoly PolyRing::monomial(const Fe& c, int deg) const
{
    FqPoly r;
    if (F_.is_zero(c))
        return r;
    r.c.assign(deg + 1, F_.zero());
    r.c[deg] = c;
    return r;
}

FqPoly PolyRing::from_ints(const std::vector<Int>& coeffs) const
{
    FqPoly r;
    for (const auto& v : coeffs)
        r.c.push_back(F_.from_int(v));
    normalize(r);
    return r;
}

bool PolyRing::is_one(const FqPoly& a) const { return a.c.size() == 1 && F_.is_one(a.c[0]); }

FqPoly PolyRing::add(const FqPoly& a, const FqPoly& b) const
{
    const FqPoly& lo = a.c.size() < b.c.size() ? a : b;
    FqPoly r = a.c.size() < b.c.size() ? b : a;
    for (size_t i = 0; i < lo.c.size(); ++i)
        F_.add_to(r.c[i], lo.c[i]);
    normalize(r);
    return r;
}

FqPoly PolyRing::sub(const FqPoly& a, const FqPoly& b) const
{
    FqPoly r = a;
    if (r.c.size() < b.c.size())
        r.c.resize(b.c.size(), F_.zero());
    for (size_t i = 0; i < b.c.size(); ++i)
        F_.sub_from(r.c[i], b.c[i]);
    normalize(r);
    return r;
}

FqPoly PolyRing::neg(const FqPoly& a) const
{
    FqPoly r;
    for (const auto& c : a.c)
        r.c.push_back(F_.neg(c));
    return r;
}

FqPoly PolyRing::mul(const FqPoly& a, const FqPoly& b) const
{
    if (a.is_zero() || b.is_zero())
        return {};
    size_t n = a.c.size() + b.c.size() - 1;
    std::vector<WideFe> acc(n, F_.wide_zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F_.is_zero(a.c[i]))
            continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            F_.mul_acc(acc[i + j], a.c[i], b.c[j]);
    }
    FqPoly r;
    r.c.reserve(n);
    for (auto& w : acc)
        r.c.push_back(F_.reduce_wide(w));
    normalize(r);
    return r;
}

FqPoly PolyRing::scale(const FqPoly& a, const Fe& s) const
{
    if (F_.is_zero(s))
        return {};
    FqPoly r;
    r.c.reserve(a.c.size());
    for (const auto& c : a.c)
        r.c.push_back(F_.mul(c, s));
    return r;
}

FqPoly PolyRing::shift(const FqPoly& a, int k) const
{
    if (a.is_zero())
        return a;
    FqPoly r;
    r.c.assign(k, F_.zero());
    r.c.insert(r.c.end(), a.c.begin(), a.c.end());
    return r;
}

FqPoly PolyRing::monic(const FqPoly& a) const
{
    if (a.is_zero())
        throw Error(Errc::ZeroPolynomial, "monic of zero polynomial");
    if (F_.is_one(a.c.back()))
        return a;
    return scale(a, F_.inv(a.c.back()));
}

FqPoly PolyRing::derivative(const FqPoly& a) const
{
    FqPoly r;
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(F_.scale(a.c[i], Int(static_cast<unsigned long>(i))));
    normalize(r);
    return r;
}

std::pair<FqPoly, FqPoly> PolyRing::divrem(const FqPoly& a, const FqPoly& b) const
{
    if (b.is_zero())
        throw Error(Errc::DivisionByZero, "polynomial division by zero");
    FqPoly r = a;
    normalize(r);
    int db = b.degree();
    if (r.degree() < db)
        return {FqPoly{}, r};
    FqPoly q;
    q.c.assign(r.degree() - db + 1, F_.zero());
    bool monic_b = F_.is_one(b.c.back());
    Fe linv = monic_b ? F_.one() : F_.inv(b.c.back());
    for (int top = r.degree(); top >= db; --top) {
        if (F_.is_zero(r.c[top]))
            continue;
        Fe c = monic_b ? r.c[top] : F_.mul(r.c[top], linv);
        int s = top - db;
        for (int i = 0; i < db; ++i)
            F_.sub_from(r.c[s + i], F_.mul(c, b.c[i]));
        r.c[top] = F_.zero();
        q.c[s] = std::move(c);
    }
    normalize(r);
    normalize(q);
    return {q, r};
}

FqPoly PolyRing::rem(const FqPoly& a, const FqPoly& b) const
{
    if (a.degree() < b.degree()) {
        if (b.is_zero())
            throw Error(Errc::DivisionByZero, "polynomial division by zero");
        return a;
    }
    return divrem(a, b).second;
}

FqPoly PolyRing::gcd(FqPoly a, FqPoly b) const
{
    while (!b.is_zero()) {
        FqPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return monic(a);
}

FqPoly PolyRing::mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) const
{
    return rem(mul(a, b), m);
}

FqPoly PolyRing::powmod(const FqPoly& a, const Int& e, const FqPoly& m) const
{
    FqPoly base = rem(a, m);
    FqPoly r = rem(one(), m);
    if (e == 0)
        return r;
    for (long i = static_cast<long>(bit_length(e)) - 1; i >= 0; --i) {
        r = mulmod(r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mulmod(r, base, m);
    }
    return r;
}

FqPoly PolyRing::frobenius_coeffs(const FqPoly& a) const
{
    FqPoly r;
    for (const auto& c : a.c)
        r.c.push_back(F_.frobenius(c));
    return r;
}

Fe PolyRing::eval(const FqPoly& a, const Fe& x) const
{
    Fe r = F_.zero();
    for (size_t i = a.c.size(); i-- > 0;)
        r = F_.add(F_.mul(r, x), a.c[i]);
    return r;
}

bool PolyRing::less(const FqPoly& a, const FqPoly& b) const
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (size_t i = 0; i < a.c.size(); ++i) {
        Int ia = F_.index(a.c[i]), ib = F_.index(b.c[i]);
        if (ia != ib)
            return ia < ib;
    }
    return false;
}

} // namespace subsplit
