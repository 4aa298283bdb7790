#include "subsplit/lattice.hpp"
#include "subsplit/error.hpp"

#include <cmath>

namespace subsplit {

std::vector<Int> IntMatrix::row(size_t i) const
{
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(size_t i, const std::vector<Int>& v)
{
    if (v.size() != cols_)
        throw Error(Errc::DimensionMismatch, "row length mismatch");
    for (size_t j = 0; j < cols_; ++j)
        a_[i * cols_ + j] = v[j];
}

void IntMatrix::swap_rows(size_t i, size_t j)
{
    for (size_t c = 0; c < cols_; ++c)
        std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

IntMatrix IntMatrix::identity(size_t n)
{
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

LllParams lll_params(double delta, double eta)
{
    LllParams p;
    p.delta = Rational(delta);
    p.eta = Rational(eta);
    return p;
}

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b)
{
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

void validate(const LllParams& params)
{
    if (!(params.delta > Rational(1, 4) && params.delta < 1))
        throw Error(Errc::BadParameters, "delta must lie in (1/4, 1)");
    if (!(params.eta >= Rational(1, 2) && params.eta * params.eta < params.delta))
        throw Error(Errc::BadParameters, "eta must lie in [1/2, sqrt(delta))");
}

// Nearest integer to a / b for b > 0.
Int round_div(const Int& a, const Int& b)
{
    Int num = 2 * a + b, den = 2 * b, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int exact(const Int& a, const Int& b)
{
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

IntMatrix lll_reduce(const IntMatrix& basis, const LllParams& params)
{
    validate(params);
    const size_t n = basis.rows();
    if (n == 0)
        return basis;
    // One-based working arrays.
    std::vector<std::vector<Int>> b(n + 1);
    for (size_t i = 0; i < n; ++i)
        b[i + 1] = basis.row(i);
    std::vector<Int> d(n + 1, Int(0));
    std::vector<std::vector<Int>> lam(n + 1, std::vector<Int>(n + 1, Int(0)));
    const Int dnum = params.delta.get_num(), dden = params.delta.get_den();

    auto red = [&](size_t k, size_t l) {
        Int twice = 2 * abs(lam[k][l]);
        if (twice <= d[l])
            return;
        Int q = round_div(lam[k][l], d[l]);
        for (size_t c = 0; c < b[k].size(); ++c)
            mpz_submul(b[k][c].get_mpz_t(), q.get_mpz_t(), b[l][c].get_mpz_t());
        lam[k][l] -= q * d[l];
        for (size_t i = 1; i < l; ++i)
            lam[k][i] -= q * lam[l][i];
    };

    size_t k = 2, kmax = 1;
    d[0] = 1;
    d[1] = dot(b[1], b[1]);
    if (d[1] == 0)
        throw Error(Errc::RankDeficient, "zero basis vector");
    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (size_t j = 1; j <= k; ++j) {
                Int u = dot(b[k], b[j]);
                for (size_t i = 1; i < j; ++i)
                    u = exact(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
                if (j < k)
                    lam[k][j] = u;
                else {
                    d[k] = u;
                    if (u == 0)
                        throw Error(Errc::RankDeficient, "basis vectors are linearly dependent");
                }
            }
        }
        red(k, k - 1);
        Int lhs = dden * d[k] * d[k - 2];
        Int rhs = dnum * d[k - 1] * d[k - 1] - dden * lam[k][k - 1] * lam[k][k - 1];
        if (lhs < rhs) {
            std::swap(b[k], b[k - 1]);
            for (size_t j = 1; j + 2 <= k; ++j)
                std::swap(lam[k][j], lam[k - 1][j]);
            Int lm = lam[k][k - 1];
            Int B = exact(d[k - 2] * d[k] + lm * lm, d[k - 1]);
            for (size_t i = k + 1; i <= kmax; ++i) {
                Int t = lam[i][k];
                lam[i][k] = exact(d[k] * lam[i][k - 1] - lm * t, d[k - 1]);
                lam[i][k - 1] = exact(B * t + lm * lam[i][k], d[k]);
            }
            d[k - 1] = B;
            if (k > 2)
                --k;
        } else {
            for (size_t l = k - 1; l-- > 1;)
                red(k, l);
            ++k;
        }
    }
    IntMatrix out(n, basis.cols());
    for (size_t i = 0; i < n; ++i)
        out.set_row(i, b[i + 1]);
#ifndef NDEBUG
    // The first vector obeys ||b1||^2 <= C^2 det^(2/n); checked in logs on a Gram basis.
    {
        GramSchmidt gs = gram_schmidt(out);
        double log2_det2 = 0;
        for (const auto& v : gs.norms)
            log2_det2 += log2_rational(v);
        double lhs = log2_abs(dot(out.row(0), out.row(0)));
        double bound = 2 * lll_log2_factor(params, n) + log2_det2 / static_cast<double>(n);
        if (lhs > bound + 1e-6)
            throw Error(Errc::DomainError, "LLL first-vector bound violated");
    }
#endif
    return out;
}

IntMatrix lll_reduce(const IntMatrix& basis, double delta, double eta)
{
    return lll_reduce(basis, lll_params(delta, eta));
}

GramSchmidt gram_schmidt(const IntMatrix& basis)
{
    size_t n = basis.rows(), m = basis.cols();
    GramSchmidt gs;
    gs.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    gs.norms.assign(n, Rational(0));
    std::vector<std::vector<Rational>> bstar(n, std::vector<Rational>(m));
    for (size_t i = 0; i < n; ++i) {
        for (size_t c = 0; c < m; ++c)
            bstar[i][c] = basis(i, c);
        for (size_t j = 0; j < i; ++j) {
            if (gs.norms[j] == 0)
                continue;
            Rational s = 0;
            for (size_t c = 0; c < m; ++c)
                s += Rational(basis(i, c)) * bstar[j][c];
            Rational mu = s / gs.norms[j];
            gs.mu[i][j] = mu;
            for (size_t c = 0; c < m; ++c)
                bstar[i][c] -= mu * bstar[j][c];
        }
        Rational nn = 0;
        for (size_t c = 0; c < m; ++c)
            nn += bstar[i][c] * bstar[i][c];
        gs.norms[i] = nn;
    }
    return gs;
}

bool is_lll_reduced(const IntMatrix& basis, const LllParams& params)
{
    GramSchmidt gs = gram_schmidt(basis);
    size_t n = basis.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (abs(gs.mu[i][j]) > params.eta)
                return false;
    for (size_t k = 1; k < n; ++k) {
        Rational mu = gs.mu[k][k - 1];
        if (gs.norms[k] < (params.delta - mu * mu) * gs.norms[k - 1])
            return false;
    }
    return true;
}

Int determinant(const IntMatrix& square)
{
    size_t n = square.rows();
    if (n != square.cols())
        throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0)
        return 1;
    IntMatrix a = square;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a(i, j) = exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Membership lattice_membership(const IntMatrix& basis, const std::vector<Int>& v)
{
    size_t r = basis.rows(), c = basis.cols();
    if (v.size() != c)
        throw Error(Errc::DimensionMismatch, "vector length differs from the lattice dimension");
    // Solve x * B = v, i.e. B^T x = v^T, by rational elimination.
    std::vector<std::vector<Rational>> A(c, std::vector<Rational>(r + 1));
    for (size_t i = 0; i < c; ++i) {
        for (size_t j = 0; j < r; ++j)
            A[i][j] = basis(j, i);
        A[i][r] = v[i];
    }
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < r && row < c; ++col) {
        size_t piv = row;
        while (piv < c && A[piv][col] == 0)
            ++piv;
        if (piv == c)
            continue;
        std::swap(A[piv], A[row]);
        Rational inv = 1 / A[row][col];
        for (auto& x : A[row])
            x *= inv;
        for (size_t i = 0; i < c; ++i) {
            if (i == row || A[i][col] == 0)
                continue;
            Rational f = A[i][col];
            for (size_t j = col; j <= r; ++j)
                A[i][j] -= f * A[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivots.size() != r)
        throw Error(Errc::RankDeficient, "membership needs a full-rank basis");
    Membership out;
    for (size_t i = row; i < c; ++i)
        if (A[i][r] != 0)
            return out;
    out.coords.assign(r, Int(0));
    for (size_t i = 0; i < r; ++i) {
        const Rational& x = A[i][r];
        if (x.get_den() != 1)
            return Membership{};
        out.coords[pivots[i]] = x.get_num();
    }
    out.member = true;
    return out;
}

double lll_log2_factor(const LllParams& params, size_t dim)
{
    double base = log2_rational(params.delta - params.eta * params.eta);
    return -static_cast<double>(dim - 1) / 4.0 * base;
}

} // namespace subsplit
