#include "subsplit/subfield.hpp"
#include "subsplit/error.hpp"

namespace subsplit {

namespace {

Int inv_mod_p(const Int& a, const Int& p)
{
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw Error(Errc::DivisionByZero, "no inverse mod p");
    return r;
}

// Inverse of a square matrix over F_p; empty result when singular.
std::vector<std::vector<Int>> invert_mod_p(std::vector<std::vector<Int>> a, const Int& p)
{
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        a[i].resize(2 * n, Int(0));
        a[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return {};
        std::swap(a[piv], a[c]);
        Int iv = inv_mod_p(a[c][c], p);
        for (auto& v : a[c])
            v = mod(v * iv, p);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Int f = a[r][c];
            for (size_t j = 0; j < 2 * n; ++j)
                a[r][j] = mod(a[r][j] - f * a[c][j], p);
        }
    }
    std::vector<std::vector<Int>> out(n);
    for (size_t i = 0; i < n; ++i)
        out[i].assign(a[i].begin() + n, a[i].end());
    return out;
}

} // namespace

int rank_mod_p(std::vector<std::vector<Int>> rows, const Int& p)
{
    if (rows.empty())
        return 0;
    size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && mod(rows[piv][c], p) == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        Int iv = inv_mod_p(mod(rows[r][c], p), p);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            Int f = mod(rows[i][c] * iv, p);
            if (f == 0)
                continue;
            for (size_t j = c; j < cols; ++j)
                rows[i][j] = mod(rows[i][j] - f * rows[r][j], p);
        }
        ++r;
    }
    return static_cast<int>(r);
}

ScalarSubfield::ScalarSubfield(const BaseField& F, int k) : F_(F), k_(k)
{
    int n1 = F.degree();
    if (k < 1 || n1 % k != 0)
        throw Error(Errc::BadParameters, "scalar subfield degree must divide n1");
    m_ = n1 / k;
    if (k == 1) {
        z_ = F.one();
        zpow_ = {F.one()};
        return;
    }
    if (k == n1) {
        z_ = n1 > 1 ? F.gen() : F.one();
        zpow_.push_back(F.one());
        for (int a = 1; a < k; ++a)
            zpow_.push_back(F.mul(zpow_.back(), z_));
        return;
    }
    Int e = (F.order() - 1) / (pow(F.p(), static_cast<unsigned long>(k)) - 1);
    const Int& p = F.p();
    for (Int idx = p;; ++idx) {
        if (idx >= F.order())
            throw Error(Errc::NoBasisFound, "no generator for the scalar subfield");
        Fe w = F.from_index(idx);
        Fe z = F.pow(w, e);
        std::vector<Fe> zp{F.one()};
        for (int a = 1; a < k; ++a)
            zp.push_back(F.mul(zp.back(), z));
        // Columns j*k + a hold the coordinates of z^a y^j.
        std::vector<std::vector<Int>> B(n1, std::vector<Int>(n1, Int(0)));
        Fe yj = F.one();
        for (int j = 0; j < m_; ++j) {
            for (int a = 0; a < k; ++a) {
                Fe v = F.mul(zp[a], yj);
                for (int r = 0; r < n1; ++r)
                    B[r][j * k + a] = v[r];
            }
            yj = F.mul(yj, F.gen());
        }
        auto inv = invert_mod_p(B, p);
        if (inv.empty())
            continue;
        z_ = z;
        zpow_ = zp;
        binv_ = inv;
        return;
    }
}

std::vector<Fe> ScalarSubfield::expand(const Fe& a) const
{
    int n1 = F_.degree();
    if (m_ == 1)
        return {a};
    std::vector<Fe> out;
    out.reserve(m_);
    if (k_ == 1) {
        for (int j = 0; j < n1; ++j)
            out.push_back(F_.from_int(a[j]));
        return out;
    }
    const Int& p = F_.p();
    std::vector<Int> s(n1, Int(0));
    for (int r = 0; r < n1; ++r) {
        for (int c = 0; c < n1; ++c)
            mpz_addmul(s[r].get_mpz_t(), binv_[r][c].get_mpz_t(), a[c].get_mpz_t());
        s[r] = mod(s[r], p);
    }
    for (int j = 0; j < m_; ++j) {
        Fe part = F_.zero();
        for (int t = 0; t < k_; ++t)
            if (s[j * k_ + t] != 0)
                F_.add_to(part, F_.scale(zpow_[t], s[j * k_ + t]));
        out.push_back(part);
    }
    return out;
}

Fe ScalarSubfield::pack(const std::vector<Fe>& parts, size_t offset) const
{
    if (m_ == 1)
        return parts[offset];
    Fe r = F_.zero();
    Fe yj = F_.one();
    for (int j = 0; j < m_; ++j) {
        F_.add_to(r, F_.mul(parts[offset + j], yj));
        if (j + 1 < m_)
            yj = F_.mul(yj, F_.gen());
    }
    return r;
}

Fe ScalarSubfield::element(const std::vector<Int>& digits) const
{
    Fe r = F_.zero();
    for (int a = 0; a < k_; ++a)
        if (digits[a] != 0)
            F_.add_to(r, F_.scale(zpow_[a], digits[a]));
    return r;
}

Int ScalarSubfield::order() const { return pow(F_.p(), static_cast<unsigned long>(k_)); }

} // namespace subsplit
