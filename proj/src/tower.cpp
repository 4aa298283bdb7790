#include "subsplit/tower.hpp"
#include "subsplit/error.hpp"
#include "subsplit/factor.hpp"
#include "subsplit/oracle.hpp"

#include <algorithm>

namespace subsplit {

TowerField::TowerField(BaseField F, FqPoly psi) : R_(std::move(F)), psi_(std::move(psi))
{
    R_.normalize(psi_);
    if (psi_.degree() < 1)
        throw Error(Errc::BadParameters, "tower modulus must have degree >= 1");
    psi_ = R_.monic(psi_);
    n2_ = psi_.degree();
}

Int TowerField::order() const { return subsplit::pow(base().order(), static_cast<unsigned long>(n2_)); }

TowerElement TowerField::zero() const { return TowerElement{std::vector<Fe>(n2_, base().zero())}; }

TowerElement TowerField::one() const
{
    TowerElement r = zero();
    r.c[0] = base().one();
    return r;
}

TowerElement TowerField::x() const { return from_poly(R_.x()); }

TowerElement TowerField::embed(const Fe& a) const
{
    TowerElement r = zero();
    r.c[0] = a;
    return r;
}

TowerElement TowerField::from_poly(const FqPoly& a) const
{
    FqPoly r = R_.rem(a, psi_);
    TowerElement e = zero();
    for (size_t i = 0; i < r.c.size(); ++i)
        e.c[i] = r.c[i];
    return e;
}

FqPoly TowerField::to_poly(const TowerElement& a) const
{
    FqPoly r{a.c};
    R_.normalize(r);
    return r;
}

bool TowerField::is_zero(const TowerElement& a) const
{
    for (const auto& c : a.c)
        if (!base().is_zero(c))
            return false;
    return true;
}

bool TowerField::is_one(const TowerElement& a) const
{
    if (!base().is_one(a.c[0]))
        return false;
    for (int i = 1; i < n2_; ++i)
        if (!base().is_zero(a.c[i]))
            return false;
    return true;
}

void TowerField::check(const TowerElement& a) const
{
    if (static_cast<int>(a.c.size()) != n2_)
        throw Error(Errc::FieldMismatch, "element length does not match the tower degree");
    for (const auto& c : a.c)
        if (static_cast<int>(c.size()) != n1())
            throw Error(Errc::FieldMismatch, "coefficient length does not match the base degree");
}

TowerElement TowerField::add(const TowerElement& a, const TowerElement& b) const
{
    TowerElement r = a;
    for (int i = 0; i < n2_; ++i)
        base().add_to(r.c[i], b.c[i]);
    return r;
}

TowerElement TowerField::sub(const TowerElement& a, const TowerElement& b) const
{
    TowerElement r = a;
    for (int i = 0; i < n2_; ++i)
        base().sub_from(r.c[i], b.c[i]);
    return r;
}

TowerElement TowerField::mul(const TowerElement& a, const TowerElement& b) const
{
    return from_poly(R_.mul(to_poly(a), to_poly(b)));
}

TowerElement TowerField::scale(const TowerElement& a, const Fe& s) const
{
    TowerElement r = a;
    for (auto& c : r.c)
        c = base().mul(c, s);
    return r;
}

TowerElement TowerField::inv(const TowerElement& a) const
{
    if (is_zero(a))
        throw Error(Errc::DivisionByZero, "inverse of zero tower element");
    // Extended Euclid on (psi, a) tracking the cofactor of a.
    FqPoly r0 = psi_, r1 = to_poly(a);
    FqPoly s0, s1 = R_.one();
    while (!r1.is_zero()) {
        auto [q, r] = R_.divrem(r0, r1);
        FqPoly s2 = R_.sub(s0, R_.mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw Error(Errc::DivisionByZero, "element not invertible (modulus reducible?)");
    return from_poly(R_.scale(s0, base().inv(r0.c[0])));
}

TowerElement TowerField::pow(const TowerElement& a, const Int& e) const
{
    if (e < 0)
        return pow(inv(a), -e);
    FqPoly r = R_.powmod(to_poly(a), e, psi_);
    return from_poly(r);
}

std::vector<Int> TowerField::coords(const TowerElement& a) const
{
    std::vector<Int> v;
    v.reserve(static_cast<size_t>(n2_) * n1());
    for (const auto& c : a.c)
        v.insert(v.end(), c.begin(), c.end());
    return v;
}

TowerElement TowerField::from_coords(const std::vector<Int>& v) const
{
    int k = n1();
    if (static_cast<int>(v.size()) != n2_ * k)
        throw Error(Errc::DimensionMismatch, "coordinate vector has wrong length");
    TowerElement r = zero();
    for (int i = 0; i < n2_; ++i)
        for (int j = 0; j < k; ++j)
            r.c[i][j] = mod(v[i * k + j], base().p());
    return r;
}

Int TowerField::index(const TowerElement& a) const
{
    auto v = coords(a);
    Int r = 0;
    for (size_t i = v.size(); i-- > 0;)
        r = r * base().p() + v[i];
    return r;
}

TowerElement TowerField::from_index(const Int& idx) const
{
    std::vector<Int> v(static_cast<size_t>(n2_) * n1());
    Int t = idx;
    for (auto& d : v)
        mpz_fdiv_qr(t.get_mpz_t(), d.get_mpz_t(), t.get_mpz_t(), base().p().get_mpz_t());
    return from_coords(v);
}

FqPoly fq_poly_from_lists(const BaseField& F, const std::vector<std::vector<Int>>& a)
{
    FqPoly r;
    for (const auto& ys : a)
        r.c.push_back(F.reduce_poly(ys));
    PolyRing(F).normalize(r);
    return r;
}

TowerElement element_from_lists(const TowerField& K, const std::vector<std::vector<Int>>& a)
{
    return K.from_poly(fq_poly_from_lists(K.base(), a));
}

bool in_proper_subfield(const FieldTower& T, const TowerElement& a)
{
    int n = T.n();
    for (auto [r, e] : factor_small(n)) {
        (void)e;
        Int exp = pow(T.p(), static_cast<unsigned long>(n / r)) - 1;
        if (T.K.is_one(T.K.pow(a, exp)))
            return true;
    }
    return false;
}

bool same_log_class(const FieldTower& T, const TowerElement& a, const TowerElement& b)
{
    return T.K.is_one(T.K.pow(T.K.div(a, b), T.cofactor()));
}

FieldTower tower_from_spec(const FieldSpec& spec)
{
    if (spec.n1 < 1 || spec.n2 < 1)
        throw Error(Errc::BadParameters, "extension degrees must be positive");
    if (!is_probable_prime(spec.p))
        throw Error(Errc::NotPrime, "p = " + to_string(spec.p) + " is not prime");

    BaseField F = BaseField::prime(spec.p);
    if (spec.n1 > 1) {
        std::vector<Int> h;
        if (spec.h) {
            h = *spec.h;
            if (static_cast<int>(h.size()) != spec.n1 + 1)
                throw Error(Errc::BadParameters, "h must have degree n1");
        } else {
            PolyRing Rp(F);
            for (const auto& c : smallest_irreducible(Rp, spec.n1).c)
                h.push_back(c[0]);
        }
        for (auto& c : h)
            c = mod(c, spec.p);
        if (h.back() != 1)
            throw Error(Errc::BadParameters, "h must be monic");
        PolyRing Rp(F);
        if (!is_irreducible(Rp, Rp.from_ints(h)))
            throw Error(Errc::NotIrreducible, "h is reducible over F_p");
        F = BaseField(spec.p, h);
    }

    PolyRing R(F);
    FqPoly psi;
    if (spec.psi) {
        psi = fq_poly_from_lists(F, *spec.psi);
        if (psi.degree() != spec.n2)
            throw Error(Errc::BadParameters, "psi must have degree n2");
        if (!F.is_one(psi.c.back()))
            throw Error(Errc::BadParameters, "psi must be monic");
        if (!is_irreducible(R, psi))
            throw Error(Errc::NotIrreducible, "psi is reducible over the base field");
    } else {
        psi = smallest_irreducible(R, spec.n2);
    }

    FieldTower T;
    T.K = TowerField(F, psi);
    int n = spec.n1 * spec.n2;
    Int phi = cyclotomic_value(n, spec.p);

    if (spec.ell) {
        T.ell = *spec.ell;
        if (!is_probable_prime(T.ell))
            throw Error(Errc::NotPrime, "ell is not prime");
        if (phi % T.ell != 0)
            throw Error(Errc::EllDoesNotDivide, "ell does not divide Phi_n(p)");
    } else {
        auto fac = full_factor(phi);
        Int best = 0, fallback = 0;
        for (const auto& [q, e] : fac) {
            (void)e;
            fallback = std::max(fallback, q);
            if (n % q != 0)
                best = std::max(best, q);
        }
        T.ell = best != 0 ? best : fallback;
        if (T.ell == 0)
            throw Error(Errc::EllDoesNotDivide, "Phi_n(p) has no prime factor");
    }

    Int cof = T.cofactor();
    if (spec.g) {
        T.g = element_from_lists(T.K, *spec.g);
        if (T.K.is_one(T.K.pow(T.g, cof)))
            throw Error(Errc::GeneratorOrderTooSmall, "g has order prime to ell");
    } else {
        // First element of order divisible by ell, starting from x (or y when n2 = 1).
        Int idx = spec.n2 > 1 ? pow(spec.p, spec.n1) : (spec.n1 > 1 ? spec.p : Int(2));
        for (;; ++idx) {
            if (idx >= T.K.order())
                throw Error(Errc::GeneratorOrderTooSmall, "no generator found");
            TowerElement c = T.K.from_index(idx);
            if (!T.K.is_zero(c) && !T.K.is_one(T.K.pow(c, cof))) {
                T.g = c;
                break;
            }
        }
    }
    return T;
}

} // namespace subsplit
