#include "subsplit/split_nfs.hpp"
#include "subsplit/error.hpp"
#include "subsplit/factor.hpp"
#include "subsplit/resultant.hpp"
#include "subsplit/rng.hpp"
#include "subsplit/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace subsplit {

std::vector<std::string> family_names()
{
    return {"JLSV1",       "JLSV2",        "GJL",         "Conjugation",       "Joux-Pierrot",
            "Sarkar-Singh", "TNFS-base-m", "Tower-JLSV1", "Tower-JLSV2",       "Tower-GJL",
            "Tower-Conjugation", "Tower-Joux-Pierrot", "Tower-Sarkar-Singh"};
}

std::optional<FamilyMetadata> family_metadata(const std::string& family, int n1, int n2, int D,
                                              int deg_px, int n3)
{
    const int n = n1 * n2;
    FamilyMetadata m;
    m.name = family;
    auto set = [&](int d0, int d1, double e0, double e1, bool t0, bool t1, bool tower) {
        m.deg_f0 = d0;
        m.deg_f1 = d1;
        m.norm_exp0 = t0 ? 0 : e0;
        m.norm_exp1 = t1 ? 0 : e1;
        m.tiny0 = t0;
        m.tiny1 = t1;
        m.tower = tower;
    };
    if (family == "JLSV1")
        set(n, n, 1.0 / (2 * n), 1.0 / (2 * n), false, false, false);
    else if (family == "JLSV2")
        set(n, D, 1.0 / (D + 1), 1.0 / (D + 1), false, false, false);
    else if (family == "GJL")
        set(D + 1, D, 0, 1.0 / (D + 1), true, false, false);
    else if (family == "Conjugation")
        set(2 * n, n, 0, 1.0 / (2 * n), true, false, false);
    else if (family == "Joux-Pierrot")
        set(n * deg_px, n, 0, 1.0 / (n * deg_px), true, false, false);
    else if (family == "Sarkar-Singh")
        set((D + 1) * n3, D * n3, 0, 1.0 / (n3 * (D + 1)), true, false, false);
    else if (family == "TNFS-base-m")
        set(D, 1, 1.0 / (static_cast<double>(n) * D), 1.0 / (static_cast<double>(n) * D), false, false, true);
    else if (family == "Tower-JLSV1")
        set(n2, n2, 1.0 / (2 * n), 1.0 / (2 * n), false, false, true);
    else if (family == "Tower-JLSV2")
        set(n2, D, 1.0 / (n1 * (D + 1)), 1.0 / (n1 * (D + 1)), false, false, true);
    else if (family == "Tower-GJL")
        set(D + 1, D, 0, 1.0 / (n1 * (D + 1)), true, false, true);
    else if (family == "Tower-Conjugation")
        set(2 * n2, n2, 0, 1.0 / (2 * n), true, false, true);
    else if (family == "Tower-Joux-Pierrot")
        set(n2 * deg_px, n2, 0, 1.0 / (n * deg_px), true, false, true);
    else if (family == "Tower-Sarkar-Singh") {
        int mid = n2 / std::max(1, n3);
        set((D + 1) * mid, D * mid, 0, 1.0 / (n1 * mid * (D + 1)), true, false, true);
    } else
        return std::nullopt;
    return m;
}

NfsPolySpec NfsPolySpec::from_poly(int side, IntPoly f, std::string family)
{
    ipoly::normalize(f);
    if (f.empty())
        throw Error(Errc::ZeroPolynomial, "number field polynomial is zero");
    NfsPolySpec s;
    s.side = side;
    s.deg_f = ipoly::degree(f);
    s.norm_log2 = log2_abs(ipoly::max_norm(f));
    s.f = std::move(f);
    s.family = std::move(family);
    return s;
}

NfsPolySpec NfsPolySpec::from_family(const FamilyMetadata& m, int side, double log2_Q, const Int& p)
{
    NfsPolySpec s;
    s.side = side;
    s.family = m.name;
    s.deg_f = side == 0 ? m.deg_f0 : m.deg_f1;
    bool tiny = side == 0 ? m.tiny0 : m.tiny1;
    double e = side == 0 ? m.norm_exp0 : m.norm_exp1;
    // A "log p" coefficient size: log2(ln p).
    s.norm_log2 = tiny ? std::log2(std::max(1.0, log2_abs(p) * std::log(2.0))) : e * log2_Q;
    return s;
}

namespace {

IntPoly base_modulus(const FieldTower& T)
{
    if (T.n1() == 1)
        return {};
    return T.K.base().modulus();
}

} // namespace

void check_poly_spec(const FieldTower& T, const NfsPolySpec& spec)
{
    if (spec.f.empty())
        throw Error(Errc::BadParameters, "polynomial spec has no coefficients");
    const PolyRing& R = T.K.ring();
    FqPoly fr;
    for (const Int& a : spec.f)
        fr.c.push_back(R.field().from_int(a));
    R.normalize(fr);
    if (fr.is_zero() || !R.rem(fr, T.K.modulus()).is_zero())
        throw Error(Errc::BadParameters, "psi does not divide f modulo (p, h)");
}

std::vector<std::vector<Int>> fp_right_echelon(const FieldTower& T, const SubfieldBasis& B,
                                               const TowerElement& target)
{
    const TowerField& K = T.K;
    const Int& p = T.p();
    const int k = B.scalar_degree;
    std::vector<std::vector<Int>> rows;
    Fe z = B.scalars.generator();
    for (const auto& Ui : B.powers) {
        TowerElement ut = K.mul(Ui, target);
        Fe za = K.base().one();
        for (int a = 0; a < k; ++a) {
            rows.push_back(K.coords(K.scale(ut, za)));
            za = K.base().mul(za, z);
        }
    }
    const int d = static_cast<int>(rows.size());
    int limit = static_cast<int>(rows[0].size()) - 1;
    for (int r = d - 1; r >= 0; --r) {
        int col = -1, prow = -1;
        for (int c = limit; c >= 0 && col < 0; --c)
            for (int t = r; t >= 0; --t)
                if (rows[t][c] != 0) {
                    col = c;
                    prow = t;
                    break;
                }
        if (col < 0)
            throw Error(Errc::RankDeficient, "subfield multiples of the target are dependent");
        if (prow != r)
            std::swap(rows[prow], rows[r]);
        Int iv;
        mpz_invert(iv.get_mpz_t(), rows[r][col].get_mpz_t(), p.get_mpz_t());
        for (auto& v : rows[r])
            v = mod(v * iv, p);
        for (int i = 0; i < r; ++i) {
            if (rows[i][col] == 0)
                continue;
            Int f = rows[i][col];
            for (size_t j = 0; j < rows[i].size(); ++j)
                if (rows[r][j] != 0)
                    rows[i][j] = mod(rows[i][j] - f * rows[r][j], p);
        }
        limit = col - 1;
    }
    return rows;
}

IntMatrix build_alg5_lattice(const FieldTower& T, const TowerElement& target, const SubfieldBasis& B,
                             int deg_P)
{
    const int n1 = T.n1(), n2 = T.n2(), n = T.n();
    if (deg_P < degree_bound(n1, n2, B.d))
        throw Error(Errc::DegreeOutOfRange, "deg_P below n2 - ceil(d/n1)");
    const size_t dim = static_cast<size_t>(n1) * (deg_P + 1);
    const Int& p = T.p();
    auto ech = fp_right_echelon(T, B, target);

    auto pivot_of = [](const std::vector<Int>& r) {
        for (int c = static_cast<int>(r.size()) - 1; c >= 0; --c)
            if (r[c] != 0)
                return c;
        return -1;
    };
    std::vector<bool> is_pivot(std::max<size_t>(dim, n), false);
    std::vector<std::vector<Int>> kept;
    for (const auto& r : ech) {
        int c = pivot_of(r);
        if (c >= 0 && static_cast<size_t>(c) < dim) {
            is_pivot[c] = true;
            kept.push_back(r);
        }
    }
    std::sort(kept.begin(), kept.end(),
              [&](const auto& a, const auto& b) { return pivot_of(a) < pivot_of(b); });

    IntMatrix L(dim, dim);
    size_t row = 0;
    for (size_t c = 0; c < std::min<size_t>(dim, n); ++c) {
        if (is_pivot[c])
            continue;
        L(row++, c) = p;
    }
    for (const auto& r : kept) {
        for (size_t c = 0; c < std::min<size_t>(dim, r.size()); ++c)
            L(row, c) = r[c];
        ++row;
    }
    // x^i (y^j psi mod h) for 0 <= i <= deg_P - n2.
    const BaseField& F = T.K.base();
    const FqPoly& psi = T.K.modulus();
    for (int i = 0; i + n2 <= deg_P; ++i) {
        Fe yj = F.one();
        for (int j = 0; j < n1; ++j) {
            for (int e = 0; e <= n2; ++e) {
                Fe c = F.mul(psi.c[e], yj);
                for (int jj = 0; jj < n1; ++jj)
                    L(row, static_cast<size_t>(e + i) * n1 + jj) = c[jj];
            }
            ++row;
            if (j + 1 < n1)
                yj = F.mul(yj, F.gen());
        }
    }
    if (row != dim)
        throw Error(Errc::RankDeficient, "preimage lattice is not square");
    return L;
}

std::string matrix_fingerprint(const IntMatrix& M)
{
    uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    feed(std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ";");
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j)
            feed(to_string(M(i, j)) + ",");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

IntBiPoly row_to_bipoly(const std::vector<Int>& row, int n1)
{
    IntBiPoly P;
    for (size_t i = 0; i * n1 < row.size(); ++i) {
        IntPoly c(row.begin() + i * n1, row.begin() + std::min(row.size(), (i + 1) * n1));
        ipoly::normalize(c);
        P.c.push_back(std::move(c));
    }
    normalize(P);
    return P;
}

TowerElement bipoly_image(const TowerField& K, const IntBiPoly& P)
{
    return element_from_lists(K, P.c);
}

double coefficient_bound_log2(const FieldTower& T, int d, int deg_P, const LllParams& lll)
{
    const int n1 = T.n1(), n = T.n();
    size_t dim = static_cast<size_t>(n1) * (deg_P + 1);
    double log2_Q = log2_abs(T.K.order());
    return lll_log2_factor(lll, dim) + (1.0 - static_cast<double>(d) / n) * log2_Q / dim;
}

std::vector<PrimeIdeal> ideal_factorization(const IntBiPoly& P, const IntPoly& f,
                                            const IntFactorization& norm_factors)
{
    std::vector<PrimeIdeal> out;
    IntPoly Px;
    for (const auto& c : P.c)
        Px.push_back(c.empty() ? Int(0) : c[0]);
    ipoly::normalize(Px);
    for (const auto& [q, e] : norm_factors) {
        PolyRing R(BaseField::prime(q));
        FqPoly a = R.from_ints(Px), b = R.from_ints(f);
        FqPoly g = R.gcd(a, b);
        auto rs = roots(R, g);
        // A single root carries the whole valuation; otherwise it is left unassigned.
        for (const Fe& r : rs)
            out.push_back({q, mod(-r[0], q), rs.size() == 1 ? e : 0});
    }
    return out;
}

NfsTrial nfs_trial(const FieldTower& T, const TowerElement& target, const SubfieldBasis& B,
                   const NfsPolySpec& spec, int deg_P, const LllParams& lll)
{
    if (!spec.f.empty() && deg_P > spec.deg_f - 1)
        throw Error(Errc::DegreeOutOfRange, "deg_P must be below deg f");
    NfsTrial tr;
    tr.lattice = build_alg5_lattice(T, target, B, deg_P);
    tr.reduced = lll_reduce(tr.lattice, lll);
    const double bound = coefficient_bound_log2(T, B.d, deg_P, lll);
    IntPoly h = base_modulus(T);
    for (size_t i = 0; i < tr.reduced.rows(); ++i) {
        IntBiPoly P = row_to_bipoly(tr.reduced.row(i), T.n1());
        tr.bound_ok.push_back(log2_abs(max_norm(P)) <= bound + 1e-9);
        tr.pseudonorms.push_back(spec.f.empty() ? Int(0) : resultant_int(P, spec.f, h));
        tr.rows.push_back(std::move(P));
    }
    return tr;
}

NfsSplitResult split_nfs_search(const FieldTower& T, const TowerElement& T0, const NfsPolySpec& spec,
                                const NfsSplitConfig& cfg)
{
    if (spec.f.empty())
        throw Error(Errc::BadParameters, "split_nfs_search needs an explicit polynomial");
    cfg.eas.validate();
    const int d = cfg.d == 0 ? largest_proper_divisor(T.n()) : cfg.d;
    SubfieldBasis B = subfield_basis(T, d);
    const int deg_P = cfg.deg_P == 0 ? spec.deg_f - 1 : cfg.deg_P;
    if (deg_P < degree_bound(T.n1(), T.n2(), d) || deg_P > spec.deg_f - 1)
        throw Error(Errc::DegreeOutOfRange, "deg_P outside [n2 - ceil(d/n1), deg f - 1]");
    const double bound = coefficient_bound_log2(T, d, deg_P, cfg.lll);

    const uint64_t trials = cfg.fixed_t ? 1 : cfg.max_trials;
    std::function<std::optional<NfsSplitResult>(uint64_t)> trial = [&](uint64_t i) -> std::optional<NfsSplitResult> {
        Int t = cfg.fixed_t ? *cfg.fixed_t : draw_exponent(cfg.seed, i, T.ell);
        TowerElement target = T.K.mul(T.K.pow(T.g, t), T0);
        if (in_proper_subfield(T, target))
            return std::nullopt;
        NfsTrial tr = nfs_trial(T, target, B, spec, deg_P, cfg.lll);
        for (size_t r = 0; r < tr.rows.size(); ++r) {
            Int N = abs(tr.pseudonorms[r]);
            if (N == 0)
                continue;
            // Multiples of psi are in the lattice too but map to zero.
            if (T.K.is_zero(bipoly_image(T.K, tr.rows[r])))
                continue;
            SmoothnessOutcome o = k_eas(N, cfg.eas, cfg.backend);
            if (o.verdict != Verdict::Smooth)
                continue;
            NfsSplitResult res;
            res.t = t;
            res.P = tr.rows[r];
            res.row = static_cast<int>(r);
            res.pseudonorm = tr.pseudonorms[r];
            res.factors = o.factors;
            if (T.n1() == 1)
                res.ideals = ideal_factorization(res.P, spec.f, res.factors);
            res.coeff_log2 = log2_abs(max_norm(res.P));
            res.bound_log2 = bound;
            res.coeff_bound_ok = tr.bound_ok[r];
            res.fingerprint = matrix_fingerprint(tr.lattice);
            if (!same_log_class(T, bipoly_image(T.K, res.P), target))
                throw Error(Errc::DomainError, "preimage lost the log class of the target");
            return res;
        }
        return std::nullopt;
    };
    auto won = first_success<NfsSplitResult>(trials, cfg.workers, trial);
    if (!won)
        throw Error(Errc::BudgetExhausted, "no smooth pseudonorm within " + std::to_string(trials) + " trials");
    won->second.trials_used = won->first + 1;
    return std::move(won->second);
}

double kappa_log2(int n, int m)
{
    if (n + m - 1 < n)
        return log2_abs(binomial(n + m, n));
    return log2_abs(binomial(n + m, n) * binomial(n + m - 1, n));
}

double tower_combinatorial_log2(int d1, int d2)
{
    double a = (2.0 * d2 - 1) * (d1 - 1);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * d2 - 1));
    return d1 / 2.0 * std::log2(a + 1) + a / 2.0 * std::log2(d1 + 1.0) +
           d1 * (log2_abs(fact) + 2.0 * d2 * std::log2(static_cast<double>(d1)));
}

PseudonormBound pseudonorm_bound(const NfsPolySpec& spec, int deg_P, const FieldTower& T, int d,
                                 const LllParams& lll, double h_norm_log2)
{
    const int n1 = T.n1(), n = T.n();
    const double log2_Q = log2_abs(T.K.order());
    const double frac = 1.0 - static_cast<double>(d) / n;
    PseudonormBound b;
    b.estimate_log2 = n1 * deg_P * spec.norm_log2 + frac * spec.deg_f / (deg_P + 1.0) * log2_Q;
    b.coeff_log2 = coefficient_bound_log2(T, d, deg_P, lll);
    const double tail = deg_P * spec.norm_log2 + spec.deg_f * b.coeff_log2;
    b.kalkbrener_log2 = kappa_log2(spec.deg_f, deg_P) + tail;
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(spec.deg_f + deg_P));
    b.factorial_log2 = log2_abs(fact) + tail;
    b.combinatorial_log2 = tower_combinatorial_log2(n1, spec.deg_f);
    b.tower_log2 = n1 * spec.deg_f * b.coeff_log2 + deg_P * n1 * spec.norm_log2 +
                   (deg_P + spec.deg_f) * (n1 - 1) * h_norm_log2 + b.combinatorial_log2;
    return b;
}

Advice degree_advisor(const NfsPolySpec& f0, const NfsPolySpec& f1, int n1, int n2, double log2_Q, int d)
{
    const int n = n1 * n2;
    const double frac = 1.0 - static_cast<double>(d) / n;
    const int lo = n2 - (d + n1 - 1) / n1;
    Advice a;
    double best = std::numeric_limits<double>::infinity();
    double best_d = best;
    for (const NfsPolySpec* s : {&f0, &f1}) {
        for (int k = std::max(0, lo); k <= s->deg_f - 1; ++k) {
            double v = n1 * k * s->norm_log2 + frac * s->deg_f / (k + 1.0) * log2_Q;
            double extra = n1 == 1 ? kappa_log2(s->deg_f, k) : tower_combinatorial_log2(n1, s->deg_f);
            if (v < best - 1e-9 || (std::fabs(v - best) <= 1e-9 && s->side == a.side && k < a.deg_P)) {
                best = v;
                a.side = s->side;
                a.deg_P = k;
                a.log2_norm = v;
                a.log2_norm_with_D = v + extra;
            }
            if (v + extra < best_d - 1e-9) {
                best_d = v + extra;
                a.side_with_D = s->side;
                a.deg_P_with_D = k;
            }
        }
    }
    if (!std::isfinite(best))
        throw Error(Errc::DegreeOutOfRange, "no admissible preimage degree on either side");
    return a;
}

Advice degree_advisor(const NfsPolySpec& f0, const NfsPolySpec& f1, const FieldTower& T, int d)
{
    return degree_advisor(f0, f1, T.n1(), T.n2(), log2_abs(T.K.order()), d);
}

namespace {

struct Eqn {
    FqPoly A, C, F;  // E = u0 A(v0) + u1 C(v0) + F(v0)
};

} // namespace

std::vector<Fp6Solution> fp6_compress_all(const FieldTower& T, const TowerElement& target)
{
    if (T.n() != 6 || T.n1() != 1)
        throw Error(Errc::BadParameters, "fp6_compress needs n = 6 and n1 = 1");
    const TowerField& K = T.K;
    if (K.is_zero(target) || in_proper_subfield(T, target))
        throw Error(Errc::TargetInSubfield, "target lies in a proper subfield");
    const Int& p = T.p();
    Int p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
    TowerElement U = K.pow(T.g, 1 + p3);
    TowerElement V = K.pow(T.g, 1 + p2 + p4);
    TowerElement a = target, b = K.mul(V, target), c = K.mul(U, target), dd = K.mul(U, b);
    TowerElement e = K.mul(U, c), f = K.mul(U, dd);

    PolyRing R(BaseField::prime(p));
    auto lin = [&](const TowerElement& s, const TowerElement& t, int k) {
        return R.from_ints({t.c[k][0], s.c[k][0]});
    };
    Eqn E[3];
    for (int k = 3; k <= 5; ++k)
        E[k - 3] = {lin(a, b, k), lin(c, dd, k), lin(e, f, k)};

    // Eliminate u0 with E3, then u1.
    auto cross = [&](const FqPoly& x1, const FqPoly& y1, const FqPoly& x2, const FqPoly& y2) {
        return R.sub(R.mul(x1, y2), R.mul(x2, y1));
    };
    FqPoly X4 = cross(E[0].A, E[0].C, E[1].A, E[1].C), Y4 = cross(E[0].A, E[0].F, E[1].A, E[1].F);
    FqPoly X5 = cross(E[0].A, E[0].C, E[2].A, E[2].C), Y5 = cross(E[0].A, E[0].F, E[2].A, E[2].F);
    FqPoly res = R.sub(R.mul(X4, Y5), R.mul(X5, Y4));
    std::vector<Fp6Solution> out;
    if (res.is_zero())
        return out;

    const BaseField& F = R.field();
    for (const Fe& v : roots(R, res)) {
        auto at = [&](const FqPoly& q) { return R.eval(q, v); };
        std::vector<Fe> u1s;
        for (auto [X, Y] : {std::pair{&X4, &Y4}, std::pair{&X5, &Y5}}) {
            Fe xv = at(*X);
            if (!F.is_zero(xv)) {
                u1s.push_back(F.neg(F.mul(at(*Y), F.inv(xv))));
                break;
            }
        }
        // Both eliminants vanishing leaves a pencil of solutions; skipped.
        if (u1s.empty())
            continue;
        for (const Fe& u1 : u1s) {
            Fe u0;
            bool found = false;
            for (int k = 0; k < 3 && !found; ++k) {
                Fe av = at(E[k].A);
                if (F.is_zero(av))
                    continue;
                u0 = F.neg(F.mul(F.add(F.mul(u1, at(E[k].C)), at(E[k].F)), F.inv(av)));
                found = true;
            }
            if (!found)
                continue;
            bool ok = true;
            for (int k = 0; k < 3; ++k) {
                Fe val = F.add(F.add(F.mul(u0, at(E[k].A)), F.mul(u1, at(E[k].C))), at(E[k].F));
                ok = ok && F.is_zero(val);
            }
            if (!ok)
                continue;
            TowerElement u = K.add(K.add(K.embed(u0), K.scale(U, u1)), K.mul(U, U));
            TowerElement vv = K.add(K.embed(v), V);
            TowerElement P = K.mul(K.mul(u, vv), target);
            bool low = true;
            for (int k = 3; k < 6; ++k)
                low = low && P.c[k][0] == 0;
            if (!low || P.c[2][0] == 0)
                continue;
            Int w;
            mpz_invert(w.get_mpz_t(), P.c[2][0].get_mpz_t(), p.get_mpz_t());
            P = K.scale(P, F.from_int(w));
            if (!same_log_class(T, P, target))
                throw Error(Errc::DomainError, "compressed element lost the log class of the target");
            Fp6Solution s{u0[0], u1[0], v[0], w, {P.c[0][0], P.c[1][0], P.c[2][0]}};
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const Fp6Solution& x, const Fp6Solution& y) {
        return x.v0 != y.v0 ? x.v0 < y.v0 : x.u1 < y.u1;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Fp6Solution& x, const Fp6Solution& y) {
                              return x.v0 == y.v0 && x.u1 == y.u1 && x.u0 == y.u0;
                          }),
              out.end());
    return out;
}

Fp6Solution fp6_compress(const FieldTower& T, const TowerElement& target)
{
    auto all = fp6_compress_all(T, target);
    if (all.empty())
        throw Error(Errc::NoSolution, "no monic degree-2 representative for this target");
    return all.front();
}

Fp6Lattice fp6_degree2_lattice(const IntPoly& P, const Int& p, const LllParams& lll)
{
    if (P.size() != 3 || P[2] != 1)
        throw Error(Errc::BadParameters, "P must be monic of degree 2");
    Fp6Lattice L;
    L.basis = IntMatrix(3, 3);
    L.basis(0, 0) = p;
    L.basis(1, 1) = p;
    L.basis(2, 0) = mod(P[0], p);
    L.basis(2, 1) = mod(P[1], p);
    L.basis(2, 2) = 1;
    L.reduced = lll_reduce(L.basis, lll);
    Int best = -1;
    for (size_t i = 0; i < 3; ++i) {
        IntPoly r = L.reduced.row(i);
        Int nrm = ipoly::max_norm(r);
        ipoly::normalize(r);
        if (best < 0 || nrm < best) {
            best = nrm;
            L.R = r;
        }
        L.rows.push_back(std::move(r));
    }
    return L;
}

Fp6SearchResult fp6_search(const FieldTower& T, const TowerElement& T0, const IntPoly& f,
                           const Fp6SearchConfig& cfg)
{
    const Int B = bits_bound(cfg.B1_bits);
    EasParams eas = plain_params(B);
    const uint64_t trials = cfg.fixed_t ? 1 : cfg.max_trials;
    std::function<std::optional<Fp6SearchResult>(uint64_t)> trial = [&](uint64_t i) -> std::optional<Fp6SearchResult> {
        Int t = cfg.fixed_t ? *cfg.fixed_t : draw_exponent(cfg.seed, i, T.ell);
        TowerElement target = T.K.mul(T.K.pow(T.g, t), T0);
        if (in_proper_subfield(T, target))
            return std::nullopt;
        for (const auto& sol : fp6_compress_all(T, target)) {
            Fp6Lattice L = fp6_degree2_lattice(sol.P, T.p());
            for (size_t r = 0; r < L.rows.size(); ++r) {
                Int N = resultant(L.rows[r], f);
                if (N == 0)
                    continue;
                SmoothnessOutcome o = k_eas(abs(N), eas, cfg.backend);
                if (o.verdict != Verdict::Smooth)
                    continue;
                Fp6SearchResult res;
                res.t = t;
                res.solution = sol;
                res.R = L.rows[r];
                res.row = static_cast<int>(r);
                res.pseudonorm = N;
                res.factors = o.factors;
                res.ideals = ideal_factorization(bi_from_univariate(res.R), f, res.factors);
                return res;
            }
        }
        return std::nullopt;
    };
    auto won = first_success<Fp6SearchResult>(trials, cfg.workers, trial);
    if (!won)
        throw Error(Errc::NoSolution, "no smooth compressed representative found");
    won->second.trials_used = won->first + 1;
    return std::move(won->second);
}

} // namespace subsplit
