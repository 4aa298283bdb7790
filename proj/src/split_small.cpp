#include "subsplit/split_small.hpp"
#include "subsplit/error.hpp"
#include "subsplit/rng.hpp"
#include "subsplit/search.hpp"

#include <algorithm>

namespace subsplit {

int degree_bound(int n1, int n2, int d) { return n2 - (d + n1 - 1) / n1; }

int row_group_size(int n1, int d) { return n1 / static_cast<int>(gcd_long(d, n1)); }

int largest_proper_divisor(int n)
{
    for (int d = n / 2; d > 1; --d)
        if (n % d == 0)
            return d;
    return 1;
}

SubfieldBasis subfield_basis(const FieldTower& T, int d)
{
    const int n = T.n(), n1 = T.n1();
    if (d < 1 || d >= n || n % d != 0)
        throw Error(Errc::BadParameters, "d must be a proper divisor of n");
    const TowerField& K = T.K;
    SubfieldBasis B;
    B.d = d;
    B.scalar_degree = static_cast<int>(gcd_long(n1, d));
    B.d_prime = d / B.scalar_degree;
    B.scalars = ScalarSubfield(K.base(), B.scalar_degree);
    const Int& p = T.p();
    Int qn1 = K.order() - 1;
    if (gcd_long(B.d_prime, B.scalar_degree) == 1)
        B.exponent = qn1 / (pow(p, static_cast<unsigned long>(B.d_prime)) - 1);
    else
        B.exponent = qn1 / (pow(p, static_cast<unsigned long>(d)) - 1);

    const int k = B.scalar_degree;
    // Candidate multipliers r: none first, then x + c for c = 0, 1, ... by index.
    // Constants would not help, their powers stay in F_p.
    const Int q = K.base().order();
    Int r_idx = 0;
    for (int attempt = 0; attempt <= 64; ++attempt) {
        TowerElement base = T.g;
        if (r_idx != 0)
            base = K.mul(base, K.from_index(r_idx));
        TowerElement U = K.pow(base, B.exponent);
        std::vector<TowerElement> powers{K.one()};
        for (int i = 1; i < B.d_prime; ++i)
            powers.push_back(K.mul(powers.back(), U));
        // F_{p^k}-independence of the powers equals F_p-independence of z^a U^i.
        std::vector<std::vector<Int>> rows;
        Fe za = K.base().one();
        for (int a = 0; a < k; ++a) {
            for (const auto& P : powers)
                rows.push_back(K.coords(K.scale(P, za)));
            za = K.base().mul(za, B.scalars.generator());
        }
        if (rank_mod_p(rows, p) == B.d_prime * k) {
            B.U = U;
            B.powers = std::move(powers);
            B.multiplier_index = r_idx;
            return B;
        }
        if (K.degree() < 2)
            break;
        r_idx = r_idx == 0 ? q : Int(r_idx + 1);
    }
    throw Error(Errc::NoBasisFound, "no independent subfield basis after 64 multipliers");
}

namespace {

ScalarRow expand_element(const FieldTower& T, const SubfieldBasis& B, const TowerElement& a)
{
    ScalarRow row;
    row.reserve(static_cast<size_t>(T.n2()) * B.scalars.width());
    for (const auto& c : a.c) {
        auto parts = B.scalars.expand(c);
        row.insert(row.end(), parts.begin(), parts.end());
    }
    return row;
}

void row_axpy(const BaseField& F, ScalarRow& dst, const Fe& f, const ScalarRow& src)
{
    for (size_t j = 0; j < dst.size(); ++j)
        if (!F.is_zero(src[j]))
            F.sub_from(dst[j], F.mul(f, src[j]));
}

int lowest_nonzero(const BaseField& F, const ScalarRow& r)
{
    for (size_t j = 0; j < r.size(); ++j)
        if (!F.is_zero(r[j]))
            return static_cast<int>(j);
    return -1;
}

void check_target(const FieldTower& T, const TowerElement& target)
{
    T.K.check(target);
    if (T.K.is_zero(target))
        throw Error(Errc::TargetInSubfield, "target is zero");
    if (in_proper_subfield(T, target))
        throw Error(Errc::TargetInSubfield, "target lies in a proper subfield");
}

} // namespace

EchelonMatrix right_echelon(const FieldTower& T, const SubfieldBasis& B, const TowerElement& target)
{
    const BaseField& F = T.K.base();
    EchelonMatrix E;
    E.width = B.scalars.width();
    const int dp = B.d_prime;
    TowerElement cur = target;
    for (int i = 0; i < dp; ++i) {
        if (i > 0)
            cur = T.K.mul(cur, B.U);
        E.rows.push_back(expand_element(T, B, cur));
    }
    E.right_pivot.assign(dp, -1);
    int limit = static_cast<int>(E.rows[0].size()) - 1;
    for (int r = dp - 1; r >= 0; --r) {
        int col = -1, prow = -1;
        for (int c = limit; c >= 0 && col < 0; --c) {
            if (!F.is_zero(E.rows[r][c])) {
                col = c;
                prow = r;
                break;
            }
            for (int t = r - 1; t >= 0; --t) {
                if (!F.is_zero(E.rows[t][c])) {
                    col = c;
                    prow = t;
                    break;
                }
            }
        }
        if (col < 0)
            throw Error(Errc::RankDeficient, "subfield multiples of the target are dependent");
        if (prow != r)
            std::swap(E.rows[prow], E.rows[r]);
        Fe iv = F.inv(E.rows[r][col]);
        for (auto& v : E.rows[r])
            if (!F.is_zero(v))
                v = F.mul(v, iv);
        for (int i = 0; i < r; ++i) {
            if (F.is_zero(E.rows[i][col]))
                continue;
            Fe f = E.rows[i][col];
            row_axpy(F, E.rows[i], f, E.rows[r]);
        }
        E.right_pivot[r] = col;
        limit = col - 1;
    }
    return E;
}

FqPoly row_to_poly(const FieldTower& T, const SubfieldBasis& B, const ScalarRow& row)
{
    FqPoly P;
    int m = B.scalars.width();
    for (int i = 0; i < T.n2(); ++i)
        P.c.push_back(B.scalars.pack(row, static_cast<size_t>(i) * m));
    T.K.ring().normalize(P);
    return P;
}

FqPoly reduce_degree(const FieldTower& T, const TowerElement& target, const SubfieldBasis& B,
                     bool check_subfield)
{
    if (check_subfield)
        check_target(T, target);
    EchelonMatrix E = right_echelon(T, B, target);
    FqPoly P = row_to_poly(T, B, E.rows[0]);
    if (P.degree() > degree_bound(T.n1(), T.n2(), B.d))
        throw Error(Errc::RankDeficient, "reduced row exceeds the degree bound");
    return P;
}

namespace {

SubfieldCandidate make_candidate(const FieldTower& T, const SubfieldBasis& B, ScalarRow vec, int row)
{
    const BaseField& F = T.K.base();
    SubfieldCandidate c;
    c.row = row;
    int low = lowest_nonzero(F, vec);
    c.e = low < 0 ? 0 : low / B.scalars.width();
    FqPoly full = row_to_poly(T, B, vec);
    c.P.c.assign(full.c.begin() + std::min<size_t>(c.e, full.c.size()), full.c.end());
    c.slack = c.P.degree() - degree_bound(T.n1(), T.n2(), B.d);
    c.vec = std::move(vec);
    return c;
}

} // namespace

std::vector<SubfieldCandidate> double_echelon_candidates(const FieldTower& T, const TowerElement& target,
                                                         const SubfieldBasis& B, bool check_subfield)
{
    if (check_subfield)
        check_target(T, target);
    const BaseField& F = T.K.base();
    EchelonMatrix E = right_echelon(T, B, target);
    auto& rows = E.rows;
    const int dp = B.d_prime;
    const int cols = static_cast<int>(rows[0].size());
    std::vector<bool> swapped(dp, false);
    for (int s = 0; s < dp; ++s) {
        int col = -1, prow = -1;
        for (int c = 0; c < cols && col < 0; ++c) {
            for (int t = s; t < dp; ++t) {
                if (!F.is_zero(rows[t][c])) {
                    col = c;
                    prow = t;
                    break;
                }
            }
        }
        if (col < 0)
            break;
        if (prow != s) {
            std::swap(rows[prow], rows[s]);
            swapped[prow] = swapped[s] = true;
        }
        Fe iv = F.inv(rows[s][col]);
        for (int i = s + 1; i < dp; ++i) {
            if (F.is_zero(rows[i][col]))
                continue;
            Fe f = F.mul(rows[i][col], iv);
            row_axpy(F, rows[i], f, rows[s]);
        }
    }
    std::vector<SubfieldCandidate> out;
    for (int i = 0; i < dp; ++i) {
        SubfieldCandidate c = make_candidate(T, B, rows[i], i);
        c.swapped = swapped[i];
        c.sources = {i};
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<SubfieldCandidate> expand_candidates(const FieldTower& T, const SubfieldBasis& B,
                                                 const std::vector<SubfieldCandidate>& rows,
                                                 int max_extra_degree, size_t max_count)
{
    std::vector<SubfieldCandidate> out;
    if (max_count == 0 || rows.size() < 2)
        return out;
    const BaseField& F = T.K.base();
    const int m = B.scalars.width();
    const int k = B.scalar_degree;
    const Int qk = B.scalars.order();
    int w = std::min<int>(static_cast<int>(rows.size()), std::max(2, m * (max_extra_degree + 1)));

    // Scalars in index order: digits of the index over F_p are the z-coordinates.
    auto scalar = [&](const Int& idx) {
        std::vector<Int> digits(k);
        Int t = idx;
        for (int a = 0; a < k; ++a)
            mpz_fdiv_qr(t.get_mpz_t(), digits[a].get_mpz_t(), t.get_mpz_t(), F.p().get_mpz_t());
        return B.scalars.element(digits);
    };

    for (int width = 2; width <= w; ++width) {
        for (size_t s = 0; s + width <= rows.size(); ++s) {
            // mu_last = 1, mu_first != 0, the middle ones free.
            std::vector<Int> mu(width, Int(0));
            mu[0] = 1;
            for (;;) {
                ScalarRow vec = rows[s + width - 1].vec;
                std::vector<int> src;
                for (int j = 0; j + 1 < width; ++j) {
                    if (mu[j] == 0)
                        continue;
                    Fe f = F.neg(scalar(mu[j]));
                    row_axpy(F, vec, f, rows[s + j].vec);
                    src.push_back(static_cast<int>(s) + j);
                }
                src.push_back(static_cast<int>(s) + width - 1);
                if (lowest_nonzero(F, vec) >= 0) {
                    SubfieldCandidate c = make_candidate(T, B, std::move(vec), -1);
                    if (c.slack <= max_extra_degree) {
                        c.sources = src;
                        out.push_back(std::move(c));
                        if (out.size() >= max_count)
                            return out;
                    }
                }
                int pos = 0;
                while (pos + 1 < width) {
                    mu[pos] += 1;
                    if (mu[pos] < qk)
                        break;
                    mu[pos] = pos == 0 ? 1 : 0;
                    ++pos;
                }
                if (pos + 1 >= width)
                    break;
            }
        }
    }
    return out;
}

std::pair<FqPoly, FqPoly> waterloo_split(const FieldTower& T, const TowerElement& target)
{
    const PolyRing& R = T.K.ring();
    T.K.check(target);
    if (T.K.is_zero(target))
        throw Error(Errc::ZeroPolynomial, "Waterloo split of zero");
    const int n2 = T.n2();
    const int bound = (n2 - 1) / 2;
    FqPoly r0 = T.K.modulus(), r1 = T.K.to_poly(target);
    FqPoly t0, t1 = R.one();
    while (r1.degree() > bound) {
        auto [q, r] = R.divrem(r0, r1);
        FqPoly t2 = R.sub(t0, R.mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.degree() > bound || t1.degree() > n2 / 2)
        throw Error(Errc::DegreeOutOfRange, "Waterloo degree bound violated");
    if (T.K.mul(target, T.K.from_poly(t1)) != T.K.from_poly(r1))
        throw Error(Errc::DomainError, "Waterloo identity failed");
    return {r1, t1};
}

const char* strategy_name(SplitStrategy s)
{
    switch (s) {
    case SplitStrategy::Subfield: return "subfield";
    case SplitStrategy::SubfieldDouble: return "subfield+double";
    case SplitStrategy::SubfieldDoubleExpand: return "subfield+double+expand";
    case SplitStrategy::Waterloo: return "waterloo";
    }
    return "unknown";
}

std::optional<SplitStrategy> parse_strategy(const std::string& s)
{
    for (auto v : {SplitStrategy::Subfield, SplitStrategy::SubfieldDouble,
                   SplitStrategy::SubfieldDoubleExpand, SplitStrategy::Waterloo})
        if (s == strategy_name(v))
            return v;
    return std::nullopt;
}

SplitResult initial_split_search(const FieldTower& T, const TowerElement& T0, const SplitConfig& cfg)
{
    if (cfg.B1 < 1)
        throw Error(Errc::BadParameters, "B1 must be at least 1");
    T.K.check(T0);
    if (T.K.is_zero(T0))
        throw Error(Errc::BadParameters, "target is zero");
    const PolyRing& R = T.K.ring();
    const bool waterloo = cfg.strategy == SplitStrategy::Waterloo;
    int d = cfg.d > 0 ? cfg.d : largest_proper_divisor(T.n());
    std::optional<SubfieldBasis> basis;
    if (!waterloo)
        basis = subfield_basis(T, d);

    std::function<std::optional<SplitResult>(uint64_t)> trial = [&](uint64_t i) -> std::optional<SplitResult> {
        SplitResult res;
        res.t = draw_exponent(cfg.seed, i, T.ell);
        TowerElement target = T.K.mul(T.K.pow(T.g, res.t), T0);
        if (T.K.is_zero(target))
            return std::nullopt;
        if (waterloo) {
            auto [U, V] = waterloo_split(T, target);
            auto su = poly_smooth_test(R, U, cfg.B1, SmoothMode::Verdict);
            if (!su.smooth)
                return std::nullopt;
            auto sv = poly_smooth_test(R, V, cfg.B1, SmoothMode::Verdict);
            if (!sv.smooth)
                return std::nullopt;
            res.P = U;
            res.V = V;
            res.factors = su.factors;
            res.v_factors = sv.factors;
            return res;
        }
        std::vector<SubfieldCandidate> cands;
        if (cfg.strategy == SplitStrategy::Subfield) {
            SubfieldCandidate c;
            EchelonMatrix E = right_echelon(T, *basis, target);
            c.row = 0;
            c.P = row_to_poly(T, *basis, E.rows[0]);
            c.slack = c.P.degree() - degree_bound(T.n1(), T.n2(), d);
            cands.push_back(std::move(c));
        } else {
            cands = double_echelon_candidates(T, target, *basis, false);
            if (cfg.strategy == SplitStrategy::SubfieldDoubleExpand) {
                auto more = expand_candidates(T, *basis, cands, cfg.max_extra_degree, cfg.expand_max);
                for (auto& c : more)
                    cands.push_back(std::move(c));
            }
        }
        for (size_t ci = 0; ci < cands.size(); ++ci) {
            auto& c = cands[ci];
            if (c.P.is_zero())
                continue;
            auto sv = poly_smooth_test(R, c.P, cfg.B1, SmoothMode::Verdict);
            if (!sv.smooth)
                continue;
            res.P = c.P;
            res.e = c.e;
            res.row = c.row;
            res.slack = c.slack;
            res.candidate_index = static_cast<int>(ci);
            res.factors = sv.factors;
            return res;
        }
        return std::nullopt;
    };

    auto win = first_success<SplitResult>(cfg.max_trials, cfg.workers, trial);
    if (!win)
        throw Error(Errc::BudgetExhausted, "no smooth candidate within " + std::to_string(cfg.max_trials) +
                                               " trials");
    SplitResult res = std::move(win->second);
    res.trials_used = win->first + 1;
    TowerElement target = T.K.mul(T.K.pow(T.g, res.t), T0);
    if (waterloo) {
        res.subfield_unit_checked = T.K.mul(target, T.K.from_poly(res.V)) == T.K.from_poly(res.P);
    } else {
        TowerElement lifted = T.K.from_poly(R.shift(res.P, res.e));
        TowerElement u = T.K.div(lifted, target);
        Int e = pow(T.p(), static_cast<unsigned long>(d)) - 1;
        res.subfield_unit_checked = T.K.is_one(T.K.pow(u, e));
    }
    if (!res.subfield_unit_checked)
        throw Error(Errc::DomainError, "winning candidate failed the subfield-unit check");
    return res;
}

} // namespace subsplit
