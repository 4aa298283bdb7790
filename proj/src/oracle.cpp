#include "subsplit/oracle.hpp"
#include "subsplit/error.hpp"
#include "subsplit/factor.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_map>

namespace subsplit {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic on N-limb odd moduli.
template <int N>
struct Mont {
    u64 n[N];
    u64 ninv;

    explicit Mont(const Int& mod)
    {
        std::memset(n, 0, sizeof n);
        size_t count = 0;
        mpz_export(n, &count, -1, sizeof(u64), 0, 0, mod.get_mpz_t());
        u64 x = 1;
        for (int i = 0; i < 6; ++i)
            x *= 2 - n[0] * x;
        ninv = ~x + 1;
    }

    void mul(const u64* a, const u64* b, u64* r) const
    {
        u64 t[N + 2];
        std::memset(t, 0, sizeof t);
        for (int i = 0; i < N; ++i) {
            u64 carry = 0;
            for (int j = 0; j < N; ++j) {
                u128 s = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
                t[j] = static_cast<u64>(s);
                carry = static_cast<u64>(s >> 64);
            }
            u128 s = static_cast<u128>(t[N]) + carry;
            t[N] = static_cast<u64>(s);
            t[N + 1] = static_cast<u64>(s >> 64);
            u64 m = t[0] * ninv;
            s = static_cast<u128>(m) * n[0] + t[0];
            carry = static_cast<u64>(s >> 64);
            for (int j = 1; j < N; ++j) {
                s = static_cast<u128>(m) * n[j] + t[j] + carry;
                t[j - 1] = static_cast<u64>(s);
                carry = static_cast<u64>(s >> 64);
            }
            s = static_cast<u128>(t[N]) + carry;
            t[N - 1] = static_cast<u64>(s);
            t[N] = t[N + 1] + static_cast<u64>(s >> 64);
        }
        if (t[N] || !less(t, n)) {
            sub_raw(t, n);
        }
        std::memcpy(r, t, sizeof(u64) * N);
    }

    static bool less(const u64* a, const u64* b)
    {
        for (int i = N - 1; i >= 0; --i)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    }

    static void sub_raw(u64* a, const u64* b)
    {
        u64 borrow = 0;
        for (int i = 0; i < N; ++i) {
            u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
            a[i] = static_cast<u64>(d);
            borrow = static_cast<u64>(d >> 64) ? 1 : 0;
        }
    }

    void add(const u64* a, const u64* b, u64* r) const
    {
        u64 carry = 0;
        for (int i = 0; i < N; ++i) {
            u128 s = static_cast<u128>(a[i]) + b[i] + carry;
            r[i] = static_cast<u64>(s);
            carry = static_cast<u64>(s >> 64);
        }
        if (carry || !less(r, n))
            sub_raw(r, n);
    }

    // |a - b| as a residue; any sign works for the gcd.
    void diff(const u64* a, const u64* b, u64* r) const
    {
        if (less(a, b)) {
            std::memcpy(r, b, sizeof(u64) * N);
            sub_raw(r, a);
        } else {
            std::memcpy(r, a, sizeof(u64) * N);
            sub_raw(r, b);
        }
    }
};

// Word-sized moduli: the generic loop carries too much bookkeeping for one or
// two limbs, and those sizes dominate the time spent on the last splits.
template <>
void Mont<1>::mul(const u64* a, const u64* b, u64* r) const
{
    u128 t = static_cast<u128>(a[0]) * b[0];
    u64 m = static_cast<u64>(t) * ninv;
    u128 mn = static_cast<u128>(m) * n[0];
    u128 s = (t >> 64) + (mn >> 64) + (static_cast<u64>(t) != 0);
    if (s >= n[0])
        s -= n[0];
    r[0] = static_cast<u64>(s);
}

template <>
void Mont<2>::mul(const u64* a, const u64* b, u64* r) const
{
    // Row 0: t = a * b0 + m0 * n, shifted down one word.
    u128 p0 = static_cast<u128>(a[0]) * b[0];
    u128 p1 = static_cast<u128>(a[1]) * b[0] + static_cast<u64>(p0 >> 64);
    u64 t0 = static_cast<u64>(p0), t1 = static_cast<u64>(p1), t2 = static_cast<u64>(p1 >> 64);
    u64 m = t0 * ninv;
    u128 s = static_cast<u128>(m) * n[0] + t0;
    s = static_cast<u128>(m) * n[1] + t1 + static_cast<u64>(s >> 64);
    t0 = static_cast<u64>(s);
    s = static_cast<u128>(t2) + static_cast<u64>(s >> 64);
    t1 = static_cast<u64>(s);
    t2 = static_cast<u64>(s >> 64);
    // Row 1.
    p0 = static_cast<u128>(a[0]) * b[1] + t0;
    p1 = static_cast<u128>(a[1]) * b[1] + t1 + static_cast<u64>(p0 >> 64);
    t0 = static_cast<u64>(p0);
    t1 = static_cast<u64>(p1);
    u128 top = static_cast<u128>(t2) + static_cast<u64>(p1 >> 64);
    m = t0 * ninv;
    s = static_cast<u128>(m) * n[0] + t0;
    s = static_cast<u128>(m) * n[1] + t1 + static_cast<u64>(s >> 64);
    u64 r0 = static_cast<u64>(s);
    top += static_cast<u64>(s >> 64);
    u64 r1 = static_cast<u64>(top);
    u64 hi = static_cast<u64>(top >> 64);
    if (hi || r1 > n[1] || (r1 == n[1] && r0 >= n[0])) {
        u128 d = static_cast<u128>(r0) - n[0];
        r0 = static_cast<u64>(d);
        r1 = r1 - n[1] - static_cast<u64>((d >> 64) ? 1 : 0);
    }
    r[0] = r0;
    r[1] = r1;
}

template <int N>
Int limbs_to_int(const u64* a)
{
    Int r;
    mpz_import(r.get_mpz_t(), N, -1, sizeof(u64), 0, 0, a);
    return r;
}

template <int N>
Int rho_impl(const Int& n, u64 max_iter, unsigned long c_val)
{
    Mont<N> M(n);
    u64 c[N], y[N], x[N], q[N], ys[N], tmp[N];
    std::memset(c, 0, sizeof c);
    std::memset(y, 0, sizeof y);
    c[0] = c_val;
    y[0] = 2;
    // One in Montgomery form is 2^(64N) mod n.
    Int one_m = (Int(1) << (64 * N)) % n;
    std::memset(q, 0, sizeof q);
    size_t cnt = 0;
    mpz_export(q, &cnt, -1, sizeof(u64), 0, 0, one_m.get_mpz_t());
    const u64 batch = 64;
    u64 r = 1, iters = 0;
    Int g = 1;
    auto step = [&](u64* v) {
        M.mul(v, v, tmp);
        M.add(tmp, c, v);
    };
    do {
        std::memcpy(x, y, sizeof y);
        for (u64 i = 0; i < r; ++i)
            step(y);
        iters += r;
        u64 k = 0;
        do {
            std::memcpy(ys, y, sizeof y);
            u64 lim = std::min(batch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                step(y);
                M.diff(x, y, tmp);
                M.mul(q, tmp, q);
            }
            iters += lim;
            k += lim;
            Int qi = limbs_to_int<N>(q);
            mpz_gcd(g.get_mpz_t(), qi.get_mpz_t(), n.get_mpz_t());
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1 && iters < max_iter);
    if (g == n) {
        // Backtrack one step at a time from the last saved point.
        for (u64 guard = 0; guard < 2 * batch; ++guard) {
            step(ys);
            M.diff(x, ys, tmp);
            Int di = limbs_to_int<N>(tmp);
            mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), n.get_mpz_t());
            if (g != 1)
                break;
        }
    }
    if (g == 1 || g == n)
        return 0;
    return g;
}

const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1UL << 16;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// Elliptic curve method, stage 1 and a baby-step giant-step stage 2, on
// Montgomery curves in Suyama's parametrization. Points are (X : Z).
class Ecm {
public:
    explicit Ecm(const Int& n) : n_(n) {}

    // A nontrivial factor of n, or 0 when this curve finds none.
    Int curve(unsigned long sigma, unsigned long B1, unsigned long B2)
    {
        Int s = sigma, u = s * s - 5, v = 4 * s;
        Int x = mod(u * u * u, n_), z = mod(v * v * v, n_);
        Int num = mod(Int(v - u) * (v - u) * (v - u) * (3 * u + v), n_);
        Int den = mod(16 * u * u * u * v, n_);
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n_.get_mpz_t());
        if (g != 1)
            return g == n_ ? Int(0) : g;
        Int inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n_.get_mpz_t());
        a24_ = mod(num * inv, n_);

        Pt Q{x, z};
        const auto& primes = primes_upto_max();
        for (unsigned long p : primes) {
            if (p > B1)
                break;
            unsigned long q = p;
            while (q <= B1 / p)
                q *= p;
            Q = ladder(Q, q);
        }
        mpz_gcd(g.get_mpz_t(), Q.z.get_mpz_t(), n_.get_mpz_t());
        if (g != 1)
            return g == n_ ? Int(0) : g;

        const unsigned long D = 2310;
        std::vector<Pt> baby(D / 2);
        std::vector<bool> coprime(D / 2, false);
        Pt Q2 = dbl(Q);
        baby[1] = Q;
        baby[3] = add(Q2, Q, Q);
        for (unsigned long j = 5; j < D / 2; j += 2)
            baby[j] = add(baby[j - 2], Q2, baby[j - 4]);
        for (unsigned long j = 1; j < D / 2; j += 2)
            coprime[j] = gcd_long(static_cast<long>(j), static_cast<long>(D)) == 1;

        const auto& is_p = prime_table();
        Pt QD = ladder(Q, D);
        unsigned long i = B1 / D + 1;
        Pt T = ladder(Q, i * D), Tprev = i > 1 ? ladder(Q, (i - 1) * D) : Pt{};
        Int acc = 1, t;
        for (; (i - 1) * D <= B2; ++i) {
            for (unsigned long j = 1; j < D / 2; j += 2) {
                if (!coprime[j])
                    continue;
                unsigned long lo = i * D - j, hi = i * D + j;
                bool want = (lo > B1 && lo <= B2 && is_p[lo]) || (hi > B1 && hi <= B2 && is_p[hi]);
                if (!want)
                    continue;
                t = T.x * baby[j].z - baby[j].x * T.z;
                acc = mod(acc * t, n_);
            }
            Pt next = i == 1 ? dbl(T) : add(T, QD, Tprev);
            Tprev = std::move(T);
            T = std::move(next);
        }
        mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), n_.get_mpz_t());
        return g == 1 || g == n_ ? Int(0) : g;
    }

    static constexpr unsigned long kMaxB2 = 1UL << 22;

private:
    struct Pt {
        Int x, z;
    };

    Int mulm(const Int& a, const Int& b)
    {
        mpz_mul(tmp_.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int r;
        mpz_mod(r.get_mpz_t(), tmp_.get_mpz_t(), n_.get_mpz_t());
        return r;
    }

    Pt dbl(const Pt& P)
    {
        Int s = P.x + P.z, d = P.x - P.z;
        Int t1 = mulm(s, s), t2 = mulm(d, d);
        Int t3 = t1 - t2;
        return {mulm(t1, t2), mulm(t3, t2 + mulm(a24_, t3))};
    }

    // P + Q given P - Q.
    Pt add(const Pt& P, const Pt& Q, const Pt& diff)
    {
        Int u = mulm(P.x - P.z, Q.x + Q.z), v = mulm(P.x + P.z, Q.x - Q.z);
        Int s = u + v, d = u - v;
        return {mulm(diff.z, mulm(s, s)), mulm(diff.x, mulm(d, d))};
    }

    Pt ladder(const Pt& P, unsigned long k)
    {
        if (k == 1)
            return P;
        Pt R0 = P, R1 = dbl(P);
        int top = 63 - __builtin_clzl(k);
        for (int b = top - 1; b >= 0; --b) {
            if ((k >> b) & 1) {
                R0 = add(R1, R0, P);
                R1 = dbl(R1);
            } else {
                R1 = add(R1, R0, P);
                R0 = dbl(R0);
            }
        }
        return R0;
    }

    static const std::vector<bool>& prime_table()
    {
        static const std::vector<bool> table = [] {
            std::vector<bool> t(kMaxB2 + 1, true);
            t[0] = t[1] = false;
            for (unsigned long i = 2; i * i <= kMaxB2; ++i)
                if (t[i])
                    for (unsigned long j = i * i; j <= kMaxB2; j += i)
                        t[j] = false;
            return t;
        }();
        return table;
    }

    static const std::vector<unsigned long>& primes_upto_max()
    {
        static const std::vector<unsigned long> primes = [] {
            std::vector<unsigned long> out;
            const auto& t = prime_table();
            for (unsigned long i = 2; i <= kMaxB2; ++i)
                if (t[i])
                    out.push_back(i);
            return out;
        }();
        return primes;
    }

    Int n_, a24_, tmp_;
};

} // namespace

Int ecm_split(const Int& n, int max_curves)
{
    Ecm ecm(n);
    for (int c = 0; c < max_curves; ++c) {
        unsigned long B1 = c < 25 ? 2000 : c < 120 ? 11000 : 50000;
        unsigned long B2 = std::min(Ecm::kMaxB2, 100 * B1);
        Int f = ecm.curve(6 + static_cast<unsigned long>(c), B1, B2);
        if (f != 0)
            return f;
    }
    return 0;
}

namespace {

void split_into(const Int& n, u64 max_iter, std::map<Int, int>& out, int mult)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = bit_length(n); e >= 2; --e) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                split_into(root, max_iter, out, mult * static_cast<int>(e));
                return;
            }
        }
    }
    // A short rho run picks up small factors cheaply; ECM takes the large
    // ones; rho at the full cap remains the last resort.
    Int f = pollard_rho(n, std::min<u64>(max_iter, u64(1) << 18), 1);
    if (f == 0)
        f = ecm_split(n, 400);
    if (f != 0) {
        Int other = n / f;
        split_into(f, max_iter, out, mult);
        split_into(other, max_iter, out, mult);
        return;
    }
    for (unsigned long c = 1; c <= 20; ++c) {
        f = pollard_rho(n, max_iter, c);
        if (f != 0) {
            Int other = n / f;
            split_into(f, max_iter, out, mult);
            split_into(other, max_iter, out, mult);
            return;
        }
    }
    throw Error(Errc::BudgetExceeded, "rho failed to split a " + std::to_string(bit_length(n)) +
                                          "-bit composite within budget");
}

} // namespace

Int pollard_rho(const Int& n, uint64_t max_iterations, unsigned long c)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    size_t limbs = (bit_length(n) + 63) / 64;
    switch (limbs) {
    case 1: return rho_impl<1>(n, max_iterations, c);
    case 2: return rho_impl<2>(n, max_iterations, c);
    case 3: return rho_impl<3>(n, max_iterations, c);
    case 4: return rho_impl<4>(n, max_iterations, c);
    case 5: return rho_impl<5>(n, max_iterations, c);
    case 6: return rho_impl<6>(n, max_iterations, c);
    case 7: return rho_impl<7>(n, max_iterations, c);
    case 8: return rho_impl<8>(n, max_iterations, c);
    case 9: return rho_impl<9>(n, max_iterations, c);
    case 10: return rho_impl<10>(n, max_iterations, c);
    case 11: return rho_impl<11>(n, max_iterations, c);
    case 12: return rho_impl<12>(n, max_iterations, c);
    case 13: return rho_impl<13>(n, max_iterations, c);
    case 14: return rho_impl<14>(n, max_iterations, c);
    case 15: return rho_impl<15>(n, max_iterations, c);
    case 16: return rho_impl<16>(n, max_iterations, c);
    default:
        throw Error(Errc::BudgetExceeded, "rho limited to 1024-bit inputs");
    }
}

IntFactorization full_factor(const Int& m, const OracleBudget& budget)
{
    if (m < 1)
        throw Error(Errc::DomainError, "full_factor needs m >= 1");
    std::map<Int, int> acc;
    Int n = m;
    for (unsigned long q : small_primes()) {
        if (n == 1)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
            acc[Int(q)] += 1;
        }
    }
    u64 max_iter = u64(1) << std::min(62u, budget.max_factor_bits / 4 + 2);
    split_into(n, max_iter, acc, 1);
    IntFactorization out(acc.begin(), acc.end());
    return out;
}

Int bsgs_log(const TowerField& K, const TowerElement& base, const TowerElement& target,
             const Int& order, const OracleBudget& budget)
{
    if (order > budget.max_group_order)
        throw Error(Errc::BudgetExceeded, "group order above BSGS budget");
    Int m;
    mpz_sqrtrem(m.get_mpz_t(), Int().get_mpz_t(), order.get_mpz_t());
    if (m * m < order)
        m += 1;
    unsigned long steps = m.get_ui();
    std::unordered_map<std::string, unsigned long> table;
    table.reserve(steps * 2);
    TowerElement cur = K.one();
    for (unsigned long j = 0; j < steps; ++j) {
        table.emplace(K.index(cur).get_str(62), j);
        cur = K.mul(cur, base);
    }
    TowerElement giant = K.inv(K.pow(base, m));
    TowerElement gamma = target;
    for (unsigned long i = 0; i <= steps; ++i) {
        auto it = table.find(K.index(gamma).get_str(62));
        if (it != table.end()) {
            Int x = (Int(i) * m + it->second) % order;
            if (K.pow(base, x) == target)
                return x;
        }
        gamma = K.mul(gamma, giant);
    }
    throw Error(Errc::NotInSubgroup, "target not in the subgroup generated by base");
}

namespace {

BaseField small_field(const Int& p, int k)
{
    if (k == 1)
        return BaseField::prime(p);
    PolyRing Rp(BaseField::prime(p));
    std::vector<Int> h;
    for (const auto& c : smallest_irreducible(Rp, k).c)
        h.push_back(c[0]);
    return BaseField(p, h);
}

// Calls fn on every monic polynomial of degree d over F.
template <class Fn>
void for_each_monic(const BaseField& F, int d, Fn&& fn)
{
    Int q = F.order();
    std::vector<Int> digits(d, Int(0));
    std::vector<Fe> elems;
    for (Int i = 0; i < q; ++i)
        elems.push_back(F.from_index(i));
    unsigned long qi = q.get_ui();
    std::vector<unsigned long> dg(d, 0);
    for (;;) {
        FqPoly f;
        for (int i = 0; i < d; ++i)
            f.c.push_back(elems[dg[i]]);
        f.c.push_back(F.one());
        fn(f);
        int pos = 0;
        while (pos < d) {
            if (++dg[pos] < qi)
                break;
            dg[pos] = 0;
            ++pos;
        }
        if (pos == d)
            return;
    }
}

void check_enum(const Int& p, int k, int d, const OracleBudget& budget)
{
    Int total = pow(pow(p, k), static_cast<unsigned long>(d));
    if (total > Int(static_cast<unsigned long>(budget.max_enumeration)))
        throw Error(Errc::BudgetExceeded, "enumeration above budget");
}

} // namespace

Int brute_smooth_count(const Int& p, int k, int b, int d, const OracleBudget& budget)
{
    check_enum(p, k, d, budget);
    BaseField F = small_field(p, k);
    PolyRing R(F);
    Int count = 0;
    for_each_monic(F, d, [&](const FqPoly& f) {
        for (const auto& [fac, e] : factor_fq(R, f)) {
            (void)e;
            if (fac.degree() > b)
                return;
        }
        count += 1;
    });
    return count;
}

Int brute_smooth_pair_count(const Int& p, int k, int b, int d1, int d2, const OracleBudget& budget)
{
    check_enum(p, k, d1 + d2, budget);
    BaseField F = small_field(p, k);
    PolyRing R(F);
    auto smooth_list = [&](int d) {
        std::vector<FqPoly> out;
        for_each_monic(F, d, [&](const FqPoly& f) {
            for (const auto& [fac, e] : factor_fq(R, f)) {
                (void)e;
                if (fac.degree() > b)
                    return;
            }
            out.push_back(f);
        });
        return out;
    };
    auto A = smooth_list(d1), B = smooth_list(d2);
    Int count = 0;
    for (const auto& a : A)
        for (const auto& bb : B)
            if (R.gcd(a, bb).degree() == 0)
                count += 1;
    return count;
}

namespace {

// Nullspace basis of an r x c matrix over F_p (p small), as row vectors.
std::vector<std::vector<long>> nullspace_mod(std::vector<std::vector<long>> A, long p)
{
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<int> pivot_col;
    size_t r = 0;
    auto inv = [p](long a) {
        long res = 1, e = p - 2, b = a % p;
        while (e) {
            if (e & 1)
                res = res * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return res;
    };
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && A[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(A[piv], A[r]);
        long iv = inv(A[r][c]);
        for (auto& v : A[r])
            v = v * iv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0)
                continue;
            long f = A[i][c];
            for (size_t j = 0; j < cols; ++j)
                A[i][j] = ((A[i][j] - f * A[r][j]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<std::vector<long>> basis;
    std::vector<bool> is_piv(cols, false);
    for (int c : pivot_col)
        is_piv[c] = true;
    for (size_t free = 0; free < cols; ++free) {
        if (is_piv[free])
            continue;
        std::vector<long> v(cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (p - A[i][free]) % p;
        basis.push_back(v);
    }
    return basis;
}

} // namespace

int brute_subfield_multiple(const FieldTower& T, const TowerElement& target, int d,
                            const OracleBudget& budget)
{
    const TowerField& K = T.K;
    int n = T.n();
    if (n % d != 0)
        throw Error(Errc::BadParameters, "d must divide n");
    Int size = pow(T.p(), static_cast<unsigned long>(d));
    if (size > Int(static_cast<unsigned long>(budget.max_enumeration)))
        throw Error(Errc::BudgetExceeded, "subfield enumeration above budget");
    if (in_proper_subfield(T, target) && K.is_one(K.pow(target, size - 1)))
        throw Error(Errc::TargetInSubfield, "target lies in the subfield");
    long p = T.p().get_si();

    // Subfield = kernel of a -> a^(p^d) - a, as an F_p-linear map on coordinates.
    std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
    std::vector<Int> e(n, Int(0));
    for (int col = 0; col < n; ++col) {
        std::fill(e.begin(), e.end(), Int(0));
        e[col] = 1;
        TowerElement b = K.from_coords(e);
        auto img = K.coords(K.sub(K.pow(b, size), b));
        for (int row = 0; row < n; ++row)
            M[row][col] = img[row].get_si();
    }
    auto basis = nullspace_mod(M, p);
    if (static_cast<int>(basis.size()) != d)
        throw Error(Errc::RankDeficient, "subfield kernel has unexpected dimension");

    int n1 = T.n1();
    std::vector<std::vector<long>> w;
    for (const auto& bv : basis) {
        std::vector<Int> bc(bv.begin(), bv.end());
        auto prod = K.coords(K.mul(K.from_coords(bc), target));
        std::vector<long> row;
        for (const auto& v : prod)
            row.push_back(v.get_si());
        w.push_back(row);
    }
    std::vector<long> acc(n, 0);
    std::vector<long> digit(d, 0);
    int best = T.n2();
    for (;;) {
        int pos = 0;
        while (pos < d) {
            for (int j = 0; j < n; ++j) {
                acc[j] += w[pos][j];
                if (acc[j] >= p)
                    acc[j] -= p;
            }
            if (++digit[pos] < p)
                break;
            digit[pos] = 0;
            ++pos;
        }
        if (pos == d)
            break;
        int deg = -1;
        for (int j = n - 1; j >= 0; --j) {
            if (acc[j] != 0) {
                deg = j / n1;
                break;
            }
        }
        if (deg >= 0 && deg < best)
            best = deg;
    }
    return best;
}

} // namespace subsplit
