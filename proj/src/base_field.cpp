#include "subsplit/base_field.hpp"
#include "subsplit/error.hpp"

namespace subsplit {

namespace fp_poly {

void normalize(std::vector<Int>& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (auto& c : r)
        c = mod(c, p);
    normalize(r);
    return r;
}

std::vector<Int> rem(std::vector<Int> a, const std::vector<Int>& m, const Int& p)
{
    normalize(a);
    if (m.empty())
        throw Error(Errc::DivisionByZero, "polynomial remainder by zero");
    Int lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), m.back().get_mpz_t(), p.get_mpz_t());
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Int c = mod(a.back() * lead_inv, p);
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i)
            a[shift + i] = mod(a[shift + i] - c * m[i], p);
        normalize(a);
    }
    return a;
}

std::vector<Int> inv_mod(const std::vector<Int>& a, const std::vector<Int>& m, const Int& p)
{
    // Extended Euclid tracking only the coefficient of a.
    std::vector<Int> r0 = m, r1 = rem(a, m, p);
    std::vector<Int> s0, s1{Int(1)};
    while (!r1.empty()) {
        Int lead_inv;
        mpz_invert(lead_inv.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t());
        std::vector<Int> q;
        std::vector<Int> r = r0;
        normalize(r);
        if (r.size() >= r1.size())
            q.assign(r.size() - r1.size() + 1, Int(0));
        while (r.size() >= r1.size() && !r.empty()) {
            Int c = mod(r.back() * lead_inv, p);
            size_t shift = r.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                r[shift + i] = mod(r[shift + i] - c * r1[i], p);
            normalize(r);
        }
        normalize(q);
        std::vector<Int> qs = mul(q, s1, p);
        std::vector<Int> s2(std::max(s0.size(), qs.size()), Int(0));
        for (size_t i = 0; i < s0.size(); ++i)
            s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i)
            s2[i] -= qs[i];
        for (auto& c : s2)
            c = mod(c, p);
        normalize(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw Error(Errc::DivisionByZero, "element not invertible");
    Int c;
    mpz_invert(c.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
    for (auto& v : s0)
        v = mod(v * c, p);
    return s0;
}

} // namespace fp_poly

BaseField::BaseField(Int p, std::vector<Int> h) : p_(std::move(p)), h_(std::move(h))
{
    if (h_.empty()) {
        k_ = 1;
        return;
    }
    for (auto& c : h_)
        c = mod(c, p_);
    fp_poly::normalize(h_);
    if (h_.size() < 2 || h_.back() != 1)
        throw Error(Errc::BadParameters, "base modulus must be monic of degree >= 1");
    k_ = static_cast<int>(h_.size()) - 1;
    if (k_ == 1) {
        // A degree-one modulus is just F_p again.
        h_.clear();
    }
}

Int BaseField::order() const { return subsplit::pow(p_, static_cast<unsigned long>(k_)); }

Fe BaseField::one() const
{
    Fe r = zero();
    r[0] = 1;
    return r;
}

Fe BaseField::from_int(const Int& a) const
{
    Fe r = zero();
    r[0] = mod(a, p_);
    return r;
}

Fe BaseField::gen() const
{
    if (k_ == 1)
        throw Error(Errc::BadParameters, "prime field has no polynomial generator");
    Fe r = zero();
    r[1] = 1;
    return r;
}

bool BaseField::is_zero(const Fe& a) const
{
    for (const auto& c : a)
        if (c != 0)
            return false;
    return true;
}

bool BaseField::is_one(const Fe& a) const
{
    if (a[0] != 1)
        return false;
    for (int i = 1; i < k_; ++i)
        if (a[i] != 0)
            return false;
    return true;
}

Fe BaseField::add(const Fe& a, const Fe& b) const
{
    Fe r(k_);
    for (int i = 0; i < k_; ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= p_)
            r[i] -= p_;
    }
    return r;
}

Fe BaseField::sub(const Fe& a, const Fe& b) const
{
    Fe r(k_);
    for (int i = 0; i < k_; ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0)
            r[i] += p_;
    }
    return r;
}

void BaseField::add_to(Fe& a, const Fe& b) const
{
    for (int i = 0; i < k_; ++i) {
        a[i] += b[i];
        if (a[i] >= p_)
            a[i] -= p_;
    }
}

void BaseField::sub_from(Fe& a, const Fe& b) const
{
    for (int i = 0; i < k_; ++i) {
        a[i] -= b[i];
        if (a[i] < 0)
            a[i] += p_;
    }
}

Fe BaseField::neg(const Fe& a) const
{
    Fe r(k_);
    for (int i = 0; i < k_; ++i)
        r[i] = a[i] == 0 ? Int(0) : Int(p_ - a[i]);
    return r;
}

void BaseField::mul_acc(WideFe& acc, const Fe& a, const Fe& b) const
{
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < k_; ++j)
            mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

Fe BaseField::reduce_wide(WideFe& acc) const
{
    for (auto& c : acc)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
    if (k_ == 1)
        return Fe{acc[0]};
    // h is monic, so reduction needs no inversion.
    for (int top = 2 * k_ - 2; top >= k_; --top) {
        if (acc[top] == 0)
            continue;
        Int c = acc[top];
        int shift = top - k_;
        for (int i = 0; i < k_; ++i)
            mpz_submul(acc[shift + i].get_mpz_t(), c.get_mpz_t(), h_[i].get_mpz_t());
        acc[top] = 0;
        mpz_mod(acc[top - 1].get_mpz_t(), acc[top - 1].get_mpz_t(), p_.get_mpz_t());
    }
    Fe r(k_);
    for (int i = 0; i < k_; ++i)
        r[i] = mod(acc[i], p_);
    return r;
}

Fe BaseField::reduce_poly(std::vector<Int> a) const
{
    for (auto& c : a)
        c = mod(c, p_);
    if (k_ > 1)
        a = fp_poly::rem(std::move(a), h_, p_);
    else
        fp_poly::normalize(a);
    Fe r = zero();
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    return r;
}

Fe BaseField::mul(const Fe& a, const Fe& b) const
{
    if (k_ == 1) {
        Fe r(1);
        mpz_mul(r[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
        mpz_mod(r[0].get_mpz_t(), r[0].get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    WideFe acc = wide_zero();
    mul_acc(acc, a, b);
    return reduce_wide(acc);
}

Fe BaseField::scale(const Fe& a, const Int& s) const
{
    Fe r(k_);
    for (int i = 0; i < k_; ++i)
        r[i] = mod(a[i] * s, p_);
    return r;
}

Fe BaseField::inv(const Fe& a) const
{
    if (is_zero(a))
        throw Error(Errc::DivisionByZero, "inverse of zero");
    if (k_ == 1) {
        Fe r(1);
        mpz_invert(r[0].get_mpz_t(), a[0].get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    std::vector<Int> av(a.begin(), a.end());
    fp_poly::normalize(av);
    auto s = fp_poly::inv_mod(av, h_, p_);
    Fe r = zero();
    for (size_t i = 0; i < s.size(); ++i)
        r[i] = s[i];
    return r;
}

Fe BaseField::pow(const Fe& a, const Int& e) const
{
    if (e < 0)
        return pow(inv(a), -e);
    if (k_ == 1) {
        Fe r(1);
        mpz_powm(r[0].get_mpz_t(), a[0].get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
        return r;
    }
    Fe r = one();
    for (long i = static_cast<long>(bit_length(e)) - 1; i >= 0; --i) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mul(r, a);
    }
    return r;
}

Int BaseField::index(const Fe& a) const
{
    Int r = 0;
    for (int i = k_ - 1; i >= 0; --i)
        r = r * p_ + a[i];
    return r;
}

Fe BaseField::from_index(Int idx) const
{
    Fe r(k_);
    for (int i = 0; i < k_; ++i) {
        mpz_fdiv_qr(idx.get_mpz_t(), r[i].get_mpz_t(), idx.get_mpz_t(), p_.get_mpz_t());
    }
    return r;
}

} // namespace subsplit
