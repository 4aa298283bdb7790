#include "subsplit/int_poly.hpp"
#include "subsplit/error.hpp"

#include <algorithm>

namespace subsplit {

namespace ipoly {

void normalize(IntPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const IntPoly& a) { return static_cast<int>(a.size()) - 1; }

IntPoly add(const IntPoly& a, const IntPoly& b)
{
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    normalize(r);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b)
{
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    normalize(r);
    return r;
}

IntPoly neg(const IntPoly& a)
{
    IntPoly r = a;
    for (auto& c : r)
        c = -c;
    return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    normalize(r);
    return r;
}

IntPoly scale(const IntPoly& a, const Int& s)
{
    if (s == 0)
        return {};
    IntPoly r = a;
    for (auto& c : r)
        c *= s;
    return r;
}

IntPoly pow(const IntPoly& a, unsigned long e)
{
    IntPoly r{Int(1)};
    IntPoly b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        e >>= 1;
        if (e)
            b = mul(b, b);
    }
    return r;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b)
{
    if (b.empty())
        throw Error(Errc::DivisionByZero, "integer polynomial division by zero");
    IntPoly r = a;
    normalize(r);
    if (r.empty())
        return {};
    int db = degree(b);
    if (degree(r) < db)
        throw Error(Errc::DomainError, "inexact integer polynomial division");
    IntPoly q(degree(r) - db + 1, Int(0));
    for (int top = degree(r); top >= db; --top) {
        if (r[top] == 0)
            continue;
        if (!mpz_divisible_p(r[top].get_mpz_t(), b.back().get_mpz_t()))
            throw Error(Errc::DomainError, "inexact integer polynomial division");
        Int c;
        mpz_divexact(c.get_mpz_t(), r[top].get_mpz_t(), b.back().get_mpz_t());
        int s = top - db;
        for (int i = 0; i <= db; ++i)
            mpz_submul(r[s + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        q[s] = c;
    }
    normalize(r);
    if (!r.empty())
        throw Error(Errc::DomainError, "inexact integer polynomial division");
    normalize(q);
    return q;
}

Int eval(const IntPoly& a, const Int& x)
{
    Int r = 0;
    for (size_t i = a.size(); i-- > 0;)
        r = r * x + a[i];
    return r;
}

Int max_norm(const IntPoly& a)
{
    Int m = 0;
    for (const auto& c : a)
        if (abs(c) > m)
            m = abs(c);
    return m;
}

Int content(const IntPoly& a)
{
    Int g = 0;
    for (const auto& c : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly reduce_mod(const IntPoly& a, const Int& p)
{
    IntPoly r;
    for (const auto& c : a)
        r.push_back(mod(c, p));
    normalize(r);
    return r;
}

} // namespace ipoly

void normalize(IntBiPoly& a)
{
    for (auto& c : a.c)
        ipoly::normalize(c);
    while (!a.c.empty() && a.c.back().empty())
        a.c.pop_back();
}

IntBiPoly bi_mul(const IntBiPoly& a, const IntBiPoly& b)
{
    IntBiPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.c.assign(a.c.size() + b.c.size() - 1, IntPoly{});
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = ipoly::add(r.c[i + j], ipoly::mul(a.c[i], b.c[j]));
    normalize(r);
    return r;
}

Int max_norm(const IntBiPoly& a)
{
    Int m = 0;
    for (const auto& row : a.c)
        m = std::max(m, ipoly::max_norm(row));
    return m;
}

IntBiPoly bi_from_univariate(const IntPoly& a)
{
    IntBiPoly r;
    for (const auto& c : a)
        r.c.push_back(c == 0 ? IntPoly{} : IntPoly{c});
    normalize(r);
    return r;
}

} // namespace subsplit
