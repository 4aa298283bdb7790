#include "subsplit/cli.hpp"

#include "subsplit/error.hpp"
#include "subsplit/factor.hpp"
#include "subsplit/int_poly.hpp"
#include "subsplit/lattice.hpp"
#include "subsplit/oracle.hpp"
#include "subsplit/probability.hpp"
#include "subsplit/resultant.hpp"
#include "subsplit/rng.hpp"
#include "subsplit/search.hpp"
#include "subsplit/serialize.hpp"
#include "subsplit/smoothness.hpp"
#include "subsplit/split_nfs.hpp"
#include "subsplit/split_small.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace subsplit::cli {

namespace {

#ifdef SUBSPLIT_FIXTURE_DIR
const char* kFixtureDir = SUBSPLIT_FIXTURE_DIR;
#else
const char* kFixtureDir = "fixtures";
#endif

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos)
        s = s[0] == '-' ? s.substr(1) : s;
    return s;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Error(Errc::InvalidInput, "cannot write " + path);
    f << text;
}

// A field file may be a bare field spec or a fixture that holds one under "field".
FieldTower load_field(const std::string& path)
{
    json j = load_json_file(path);
    if (j.is_object() && j.contains("field"))
        j = j.at("field");
    return tower_from_spec(field_spec_from_json(j));
}

TowerElement load_target(const TowerField& K, const std::string& path)
{
    return element_from_json(K, load_json_file(path));
}

NfsPolySpec load_poly(const std::string& path)
{
    json j = load_json_file(path);
    if (j.is_object() && j.contains("poly"))
        j = j.at("poly");
    if (j.is_array())
        return NfsPolySpec::from_poly(0, int_poly_from_json(j));
    return poly_spec_from_json(j);
}

PrimePower parse_prime_power(const std::string& s)
{
    PrimePower q;
    auto caret = s.find('^');
    try {
        q.p = parse_int(s.substr(0, caret));
        q.k = caret == std::string::npos ? 1 : std::stoi(s.substr(caret + 1));
    } catch (const std::logic_error&) {
        throw UsageError("--q expects p^k, got " + s);
    }
    if (q.k < 1 || q.p < 2 || !is_probable_prime(q.p))
        throw UsageError("--q expects a prime power p^k, got " + s);
    return q;
}

double elapsed_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- probtable

struct ProbtableArgs {
    std::string q = "3^6";
    int d = 254;
    int pair_d = 0;
    int b_min = 1, b_max = 0;
    int digits = 1;
    std::string output;
};

int cmd_probtable(const ProbtableArgs& a, std::ostream& out)
{
    PrimePower q = parse_prime_power(a.q);
    int pair_d = a.pair_d > 0 ? a.pair_d : a.d;
    int b_max = a.b_max > 0 ? a.b_max : a.d;
    if (a.d < 1 || a.b_min < 1 || b_max < a.b_min || a.digits < 0 || a.digits > 12)
        throw UsageError("probtable needs d >= 1 and 1 <= b-min <= b-max");
    SmoothCountTable table(q.value(), b_max, std::max(a.d, pair_d));
    std::ostringstream s;
    s << "b,log2_waterloo_pair,log2_single\n";
    for (int b = a.b_min; b <= b_max; ++b)
        s << b << ',' << fixed(paired_log2(table, b, pair_d, pair_d), a.digits) << ','
          << fixed(table.log2_prob(b, a.d), a.digits) << '\n';
    emit(s.str(), a.output, out);
    return 0;
}

// -------------------------------------------------------------- split-small

struct SplitSmallArgs {
    std::string field, target, strategy = "subfield", output;
    int b1 = 0, d = 0, workers = 0;
    uint64_t seed = 0, max_trials = 1000;
    bool timing = false;
};

int cmd_split_small(const SplitSmallArgs& a, std::ostream& out)
{
    auto strategy = parse_strategy(a.strategy);
    if (!strategy)
        throw UsageError("unknown strategy " + a.strategy);
    if (a.b1 < 1)
        throw UsageError("--b1 must be at least 1");
    FieldTower T = load_field(a.field);
    TowerElement T0 = load_target(T.K, a.target);
    SplitConfig cfg;
    cfg.B1 = a.b1;
    cfg.strategy = *strategy;
    cfg.seed = a.seed;
    cfg.max_trials = a.max_trials;
    cfg.workers = a.workers > 0 ? a.workers : default_workers();
    cfg.d = a.d;
    auto t0 = std::chrono::steady_clock::now();
    SplitResult r = initial_split_search(T, T0, cfg);
    json j = split_result_to_json(r, cfg);
    if (a.timing)
        j["wall_time_s"] = fixed(elapsed_since(t0), 3);
    emit(j.dump(2) + "\n", a.output, out);
    return 0;
}

// ---------------------------------------------------------------- split-nfs

struct SplitNfsArgs {
    std::string field, poly, target, backend = "rho-assisted", t, output;
    int d = 0, deg_p = 0, b1 = 64, eas = 0, workers = 0;
    uint64_t seed = 0, max_trials = 1000;
    bool timing = false;
};

int cmd_split_nfs(const SplitNfsArgs& a, std::ostream& out)
{
    auto backend = parse_backend(a.backend);
    if (!backend)
        throw UsageError("unknown backend " + a.backend);
    if (a.b1 < 1 || a.eas < 0 || a.eas > 16)
        throw UsageError("--b1 must be positive and --eas in [0, 16]");
    FieldTower T = load_field(a.field);
    TowerElement T0 = load_target(T.K, a.target);
    NfsPolySpec spec = load_poly(a.poly);
    NfsSplitConfig cfg;
    cfg.d = a.d;
    cfg.deg_P = a.deg_p;
    cfg.eas = eas_params(a.eas, 1.0, log2_abs(T.K.order())).params;
    cfg.eas.B1 = bits_bound(a.b1);
    cfg.backend = *backend;
    cfg.seed = a.seed;
    cfg.max_trials = a.max_trials;
    cfg.workers = a.workers > 0 ? a.workers : default_workers();
    if (!a.t.empty())
        cfg.fixed_t = parse_int(a.t);
    auto t0 = std::chrono::steady_clock::now();
    NfsSplitResult r = split_nfs_search(T, T0, spec, cfg);
    json j = nfs_result_to_json(r);
    j["seed"] = std::to_string(a.seed);
    j["B1_bits"] = a.b1;
    j["eas_k"] = a.eas;
    j["backend"] = backend_name(*backend);
    if (a.timing)
        j["wall_time_s"] = fixed(elapsed_since(t0), 3);
    emit(j.dump(2) + "\n", a.output, out);
    return 0;
}

// -------------------------------------------------------------- compress-p6

struct CompressArgs {
    std::string field, target, poly, backend = "rho-assisted", t, output;
    int b1 = 64, workers = 0;
    uint64_t seed = 0, max_trials = 100;
    bool timing = false;
};

int cmd_compress(const CompressArgs& a, std::ostream& out)
{
    auto backend = parse_backend(a.backend);
    if (!backend)
        throw UsageError("unknown backend " + a.backend);
    if (a.b1 < 1)
        throw UsageError("--b1 must be positive");
    FieldTower T = load_field(a.field);
    TowerElement T0 = load_target(T.K, a.target);
    NfsPolySpec spec = load_poly(a.poly);
    Fp6SearchConfig cfg;
    cfg.B1_bits = a.b1;
    cfg.backend = *backend;
    cfg.seed = a.seed;
    cfg.max_trials = a.max_trials;
    cfg.workers = a.workers > 0 ? a.workers : default_workers();
    if (!a.t.empty())
        cfg.fixed_t = parse_int(a.t);
    auto t0 = std::chrono::steady_clock::now();
    Fp6SearchResult r = fp6_search(T, T0, spec.f, cfg);
    json j = fp6_result_to_json(r);
    j["seed"] = std::to_string(a.seed);
    j["B1_bits"] = a.b1;
    if (a.timing)
        j["wall_time_s"] = fixed(elapsed_since(t0), 3);
    emit(j.dump(2) + "\n", a.output, out);
    return 0;
}

// ---------------------------------------------------------------- eas-bench

struct EasBenchArgs {
    int bits = 96, k = 1, b1 = 0;
    double e = 1.0;
    uint64_t samples = 1000, seed = 0;
    std::string backend = "trial-division", output;
};

int cmd_eas_bench(const EasBenchArgs& a, std::ostream& out)
{
    auto backend = parse_backend(a.backend);
    if (!backend)
        throw UsageError("unknown backend " + a.backend);
    if (a.bits < 8 || a.bits > 4096 || a.k < 0 || a.k > 16 || a.e <= 0 || a.samples < 1)
        throw UsageError("eas-bench needs 8 <= bits <= 4096, 0 <= k <= 16, e > 0, samples >= 1");
    EasDesign design = eas_params(a.k, a.e, a.bits);
    int b1 = a.b1 > 0 ? a.b1 : std::clamp(static_cast<int>(std::lround(design.B1_log2)), 2, a.bits);
    EasParams params = design.params;
    params.B1 = bits_bound(b1);
    EasParams plain = plain_params(params.B1);

    std::vector<uint64_t> aborted(a.k + 1, 0);
    uint64_t accepted = 0, not_smooth = 0, truly_smooth = 0, disagreements = 0;
    for (uint64_t i = 0; i < a.samples; ++i) {
        CounterRng rng(a.seed, i);
        Int m = rng.below(Int(1) << (a.bits - 1)) + (Int(1) << (a.bits - 1));
        SmoothnessOutcome o = k_eas(m, params, *backend);
        SmoothnessOutcome full = k_eas(m, plain, *backend);
        if (full.verdict == Verdict::Smooth)
            ++truly_smooth;
        switch (o.verdict) {
        case Verdict::Smooth: ++accepted; break;
        case Verdict::Aborted: ++aborted[std::min(o.stage, a.k)]; break;
        case Verdict::NotSmooth: ++not_smooth; break;
        }
        if (o.verdict == Verdict::Smooth && full.verdict != Verdict::Smooth)
            ++disagreements;
    }
    double n = static_cast<double>(a.samples);
    std::ostringstream s;
    s << "metric,value\n";
    s << "bits," << a.bits << "\nk," << a.k << "\ne," << fixed(a.e, 6) << "\nsamples," << a.samples << '\n';
    s << "seed," << a.seed << "\nbackend," << backend_name(*backend) << "\nB1_bits," << b1 << '\n';
    for (int i = 0; i <= a.k; ++i)
        s << "theta_" << i << ',' << params.theta[i].get_str() << '\n';
    for (int i = 0; i <= a.k; ++i)
        s << "b_" << i << ',' << params.b[i].get_str() << '\n';
    for (int i = 0; i <= a.k; ++i)
        s << "aborted_stage_" << i << ',' << aborted[i] << '\n';
    s << "not_smooth," << not_smooth << "\naccepted," << accepted << '\n';
    s << "acceptance_rate," << fixed(accepted / n, 6) << '\n';
    s << "complete_smooth," << truly_smooth << '\n';
    s << "complete_smooth_rate," << fixed(truly_smooth / n, 6) << '\n';
    s << "false_positives," << disagreements << '\n';
    s << "realized_trials_per_success,"
      << (accepted ? fixed(n / static_cast<double>(accepted), 3) : std::string("inf")) << '\n';
    s << "complete_trials_per_success,"
      << (truly_smooth ? fixed(n / static_cast<double>(truly_smooth), 3) : std::string("inf")) << '\n';
    s << "estimate_c," << fixed(design.c, 6) << "\nestimate_gamma," << fixed(design.gamma, 6) << '\n';
    s << "estimate_B1_log2," << fixed(design.B1_log2, 6) << '\n';
    s << "estimate_time_log2," << fixed(design.time_log2, 6) << '\n';
    s << "estimate_ecm_time_log2," << fixed(ecm_cost_log2(a.e, a.bits), 6) << '\n';
    emit(s.str(), a.output, out);
    return 0;
}

// ----------------------------------------------------------- verify-fixture

class Report {
public:
    void check(const std::string& name, bool ok, json detail = json::object())
    {
        detail["ok"] = ok;
        checks_[name] = std::move(detail);
        ok_ = ok_ && ok;
    }
    void info(const std::string& name, json value) { info_[name] = std::move(value); }
    bool ok() const { return ok_; }
    json to_json(const std::string& fixture) const
    {
        return {{"fixture", fixture}, {"ok", ok_}, {"checks", checks_}, {"info", info_}};
    }

private:
    json checks_ = json::object();
    json info_ = json::object();
    bool ok_ = true;
};

std::vector<Int> padded(const IntPoly& a, size_t n)
{
    std::vector<Int> v(a.begin(), a.end());
    v.resize(n, Int(0));
    return v;
}

IntFactorization factors_from_json(const json& j)
{
    IntFactorization f;
    for (const auto& e : j)
        f.emplace_back(int_from_json(e.at(0)), e.at(1).get<int>());
    return f;
}

std::vector<PrimeIdeal> ideals_from_json(const json& j)
{
    std::vector<PrimeIdeal> v;
    for (const auto& e : j)
        v.push_back({int_from_json(e.at("prime")), int_from_json(e.at("root")), e.at("multiplicity").get<int>()});
    return v;
}

bool same_ideals(const std::vector<PrimeIdeal>& a, const std::vector<PrimeIdeal>& b)
{
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].prime != b[i].prime || a[i].root != b[i].root || a[i].multiplicity != b[i].multiplicity)
            return false;
    return true;
}

// Index of the reduced row equal to +v or -v, or -1.
int signed_row_index(const IntMatrix& M, const std::vector<Int>& v)
{
    for (size_t i = 0; i < M.rows(); ++i) {
        auto r = M.row(i);
        if (r == v)
            return static_cast<int>(i);
        for (auto& x : r)
            x = -x;
        if (r == v)
            return static_cast<int>(i);
    }
    return -1;
}

void check_norm(Report& rep, const json& fx, const Int& norm, const IntPoly& f, const IntBiPoly& P)
{
    Int printed = int_from_json(fx.at("pseudonorm"));
    rep.check("pseudonorm", abs(norm) == printed,
              {{"computed", to_string(abs(norm))}, {"bits", bit_length(norm)}});
    IntFactorization factors = full_factor(abs(norm));
    IntFactorization expected = factors_from_json(fx.at("factors"));
    json got = json::array();
    for (const auto& [q, e] : factors)
        got.push_back({to_string(q), e});
    rep.check("factorization", factors == expected, {{"computed", got}});
    auto ideals = ideal_factorization(P, f, factors);
    rep.check("ideals", same_ideals(ideals, ideals_from_json(fx.at("ideals"))),
              {{"computed", ideals_to_json(ideals)}});
}

TowerElement shifted_target(const FieldTower& T, const json& fx, Int* t_out = nullptr)
{
    Int t = int_from_json(fx.at("t"));
    if (t_out)
        *t_out = t;
    TowerElement T0 = element_from_json(T.K, fx.at("target"));
    return T.K.mul(T.K.pow(T.g, t), T0);
}

void verify_example1(const json& fx, Report& rep)
{
    FieldTower T = tower_from_spec(field_spec_from_json(fx.at("field")));
    Int ell = int_from_json(fx.at("field").at("ell"));
    rep.check("ell_is_phi6", cyclotomic_value(6, T.p()) == ell && T.ell == ell && is_probable_prime(ell),
              {{"digits", to_string(ell).size()}});

    TowerElement target = shifted_target(T, fx);
    int d = fx.at("d").get<int>();
    int deg_P = fx.at("deg_P").get<int>();
    SubfieldBasis basis = subfield_basis(T, d);
    auto M = fp_right_echelon(T, basis, target);
    bool m_ok = M.size() == fx.at("M").size();
    json got = json::array();
    for (size_t i = 0; i < M.size(); ++i) {
        json row = json::array();
        for (const auto& x : M[i])
            row.push_back(to_string(x));
        got.push_back(row);
        if (m_ok)
            m_ok = row == fx.at("M").at(i);
    }
    rep.check("echelon_matrix", m_ok, {{"computed", got}});

    IntMatrix N = build_alg5_lattice(T, target, basis, deg_P);
    IntPoly f0 = int_poly_from_json(fx.at("f0"));
    IntPoly P = int_poly_from_json(fx.at("P"));
    auto mem = lattice_membership(N, padded(P, N.cols()));
    rep.check("P_in_lattice", mem.member, {{"dimension", N.rows()}, {"fingerprint", matrix_fingerprint(N)}});

    IntBiPoly Pb = bi_from_univariate(P);
    rep.check("P_log_class", same_log_class(T, bipoly_image(T.K, Pb), target));

    IntMatrix reduced = lll_reduce(N);
    rep.info("P_reduced_row", signed_row_index(reduced, padded(P, N.cols())));
    rep.info("P_expected_row", fx.at("row"));

    check_norm(rep, fx, resultant_int(Pb, f0), f0, Pb);
}

void verify_example3(const json& fx, Report& rep)
{
    FieldTower T = tower_from_spec(field_spec_from_json(fx.at("field")));
    TowerElement target = shifted_target(T, fx);
    const json& sol = fx.at("solution");
    Fp6Solution want{int_from_json(sol.at("u0")), int_from_json(sol.at("u1")), int_from_json(sol.at("v0")),
                     int_from_json(sol.at("w")), int_poly_from_json(sol.at("P"))};
    auto sols = fp6_compress_all(T, target);
    int found = -1;
    json all = json::array();
    for (size_t i = 0; i < sols.size(); ++i) {
        const auto& s = sols[i];
        all.push_back({{"u0", to_string(s.u0)}, {"u1", to_string(s.u1)}, {"v0", to_string(s.v0)},
                       {"w", to_string(s.w)}, {"P", int_poly_to_json(s.P)}});
        if (found < 0 && s.u0 == want.u0 && s.u1 == want.u1 && s.v0 == want.v0 && s.w == want.w && s.P == want.P)
            found = static_cast<int>(i);
    }
    rep.check("compression_solution", found >= 0, {{"solutions", all}, {"index", found}});

    IntPoly R = int_poly_from_json(fx.at("R"));
    Fp6Lattice lat = fp6_degree2_lattice(want.P, T.p());
    auto mem = lattice_membership(lat.basis, padded(R, 3));
    rep.check("R_in_lattice", mem.member);
    rep.info("R_reduced_row", signed_row_index(lat.reduced, padded(R, 3)));
    rep.info("R_selected", int_poly_to_json(lat.R));

    IntPoly f0 = int_poly_from_json(fx.at("f0"));
    IntBiPoly Rb = bi_from_univariate(R);
    rep.check("R_log_class", same_log_class(T, bipoly_image(T.K, Rb), target));
    check_norm(rep, fx, resultant_int(Rb, f0), f0, Rb);
}

// Parameter checks for the large small-characteristic examples, plus a run
// of the same (n1, d) shape on a desk-scale surrogate field.
void verify_smallchar(const json& fx, Report& rep)
{
    Int p = int_from_json(fx.at("p"));
    int n1 = fx.at("n1").get<int>();
    int n2 = fx.at("n2").get<int>();
    int d = fx.at("d").get<int>();
    PolyRing R1(BaseField::prime(p));
    IntPoly h = int_poly_from_json(fx.at("h"));
    std::vector<std::vector<Int>> hl;
    for (const auto& c : h)
        hl.push_back({c});
    rep.check("h_irreducible", is_irreducible(R1, fq_poly_from_lists(R1.field(), hl)));
    rep.check("d_divides_n", (n1 * n2) % d == 0 && d > 1 && d < n1 * n2);
    int d_prime = d / static_cast<int>(gcd_long(d, n1));
    rep.check("d_prime", d_prime == fx.at("d_prime").get<int>(), {{"computed", d_prime}});
    int bound = degree_bound(n1, n2, d);
    rep.check("degree_bound", bound == fx.at("degree_bound").get<int>(), {{"computed", bound}});
    if (fx.contains("row_group"))
        rep.check("row_group", row_group_size(n1, d) == fx.at("row_group").get<int>(),
                  {{"computed", row_group_size(n1, d)}});
    if (fx.contains("waterloo_degree")) {
        int wd = (n2 - 1) / 2;
        rep.check("waterloo_degree", wd == fx.at("waterloo_degree").get<int>(), {{"computed", wd}});
    }
    if (fx.contains("deg_P"))
        rep.check("deg_P_within_slack",
                  fx.at("deg_P").get<int>() <= bound + 2, {{"slack", fx.at("deg_P").get<int>() - bound}});

    PrimePower q{p, n1};
    int b_max = 0, d_max = 0;
    for (const auto& row : fx.at("table")) {
        b_max = std::max(b_max, row.at("b").get<int>());
        d_max = std::max(d_max, row.at("d").get<int>());
    }
    SmoothCountTable table(q.value(), b_max, d_max);
    std::map<std::string, double> computed;
    for (const auto& row : fx.at("table")) {
        int b = row.at("b").get<int>(), dd = row.at("d").get<int>();
        std::string kind = row.at("kind").get<std::string>();
        double v = kind == "pair" ? paired_log2(table, b, dd, dd) : table.log2_prob(b, dd);
        double printed = row.at("log2").get<double>();
        std::string name = "table_" + kind + "_b" + std::to_string(b);
        computed[name] = v;
        rep.check(name, std::fabs(v - printed) <= row.at("tol").get<double>(),
                  {{"computed", fixed(v, 3)}, {"printed", fixed(printed, 2)}});
    }
    if (fx.contains("crossover")) {
        const json& c = fx.at("crossover");
        double pair = computed.at(c.at("pair").get<std::string>());
        double single = computed.at(c.at("single").get<std::string>());
        rep.check("crossover_order", pair < single, {{"pair", fixed(pair, 3)}, {"single", fixed(single, 3)}});
    }

    const json& sur = fx.at("surrogate");
    FieldSpec spec;
    spec.p = int_from_json(sur.at("p"));
    spec.n1 = sur.at("n1").get<int>();
    spec.n2 = sur.at("n2").get<int>();
    if (sur.contains("h"))
        spec.h = int_poly_from_json(sur.at("h"));
    FieldTower T = tower_from_spec(spec);
    int sd = sur.at("d").get<int>();
    SubfieldBasis basis = subfield_basis(T, sd);
    int sbound = degree_bound(T.n1(), T.n2(), sd);
    uint64_t seed = sur.at("seed").get<uint64_t>();
    int samples = sur.at("samples").get<int>();
    int ok = 0, max_deg = -1;
    for (int i = 0; i < samples; ++i) {
        CounterRng rng(seed, static_cast<uint64_t>(i));
        TowerElement target = T.K.from_index(rng.below(T.K.order() - 1) + 1);
        if (in_proper_subfield(T, target))
            continue;
        FqPoly P = reduce_degree(T, target, basis);
        max_deg = std::max(max_deg, P.degree());
        TowerElement image = T.K.from_poly(P);
        if (P.degree() <= sbound && same_log_class(T, image, target))
            ++ok;
        else
            ok -= samples + 1;
    }
    rep.check("surrogate_reduce_degree", ok > 0,
              {{"bound", sbound}, {"max_degree", max_deg}, {"passed", std::max(ok, 0)}});
}

int cmd_verify(const std::string& name, const std::string& dir, std::ostream& out)
{
    static const std::vector<std::string> names = {"example1", "example3", "sec43", "sec45"};
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown fixture " + name);
    json fx = load_json_file((dir.empty() ? std::string(kFixtureDir) : dir) + "/" + name + ".json");
    Report rep;
    try {
        if (name == "example1")
            verify_example1(fx, rep);
        else if (name == "example3")
            verify_example3(fx, rep);
        else
            verify_smallchar(fx, rep);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, name + ": " + e.what());
    }
    out << rep.to_json(name).dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

} // namespace

std::string usage()
{
    return "usage: subsplit <command> [options]\n"
           "\n"
           "commands:\n"
           "  probtable --q P^K --d D [--pair-d D2] [--b-min B] [--b-max B] [--digits N] [--output F]\n"
           "  split-small --field F --target F --b1 B [--strategy S] [--d D] [--seed K]\n"
           "              [--max-trials M] [--workers W] [--timing] [--output F]\n"
           "      S: subfield | subfield+double | subfield+double+expand | waterloo\n"
           "  split-nfs --field F --poly F --target F [--d D] [--deg-p K] [--b1 BITS] [--eas K] [--t T]\n"
           "            [--backend trial-division|rho-assisted] [--seed S] [--max-trials M]\n"
           "            [--workers W] [--timing] [--output F]\n"
           "  compress-p6 --field F --target F --poly F [--b1 BITS] [--t T] [--seed S]\n"
           "              [--max-trials M] [--backend B] [--workers W] [--timing] [--output F]\n"
           "  eas-bench --bits N --k K [--e E] [--samples S] [--seed R] [--b1 BITS]\n"
           "            [--backend trial-division|rho-assisted] [--output F]\n"
           "  verify-fixture --name example1|example3|sec43|sec45 [--fixtures DIR]\n"
           "\n"
           "W defaults to $SUBSPLIT_WORKERS (else 1).\n"
           "exit status: 0 success, 1 budget exhausted, no solution or failed check, 2 invalid input\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"subsplit"};
    app.require_subcommand(1);
    app.set_help_flag();

    ProbtableArgs pt;
    auto* probtable = app.add_subcommand("probtable");
    probtable->add_option("--q", pt.q);
    probtable->add_option("--d", pt.d);
    probtable->add_option("--pair-d", pt.pair_d);
    probtable->add_option("--b-min", pt.b_min);
    probtable->add_option("--b-max", pt.b_max);
    probtable->add_option("--digits", pt.digits);
    probtable->add_option("--output", pt.output);

    SplitSmallArgs ss;
    auto* split_small = app.add_subcommand("split-small");
    split_small->add_option("--field", ss.field)->required()->check(CLI::ExistingFile);
    split_small->add_option("--target", ss.target)->required()->check(CLI::ExistingFile);
    split_small->add_option("--b1", ss.b1)->required();
    split_small->add_option("--strategy", ss.strategy);
    split_small->add_option("--d", ss.d);
    split_small->add_option("--seed", ss.seed);
    split_small->add_option("--max-trials", ss.max_trials);
    split_small->add_option("--workers", ss.workers);
    split_small->add_flag("--timing", ss.timing);
    split_small->add_option("--output", ss.output);

    SplitNfsArgs sn;
    auto* split_nfs = app.add_subcommand("split-nfs");
    split_nfs->add_option("--field", sn.field)->required()->check(CLI::ExistingFile);
    split_nfs->add_option("--poly", sn.poly)->required()->check(CLI::ExistingFile);
    split_nfs->add_option("--target", sn.target)->required()->check(CLI::ExistingFile);
    split_nfs->add_option("--d", sn.d);
    split_nfs->add_option("--deg-p", sn.deg_p);
    split_nfs->add_option("--b1", sn.b1);
    split_nfs->add_option("--eas", sn.eas);
    split_nfs->add_option("--t", sn.t);
    split_nfs->add_option("--backend", sn.backend);
    split_nfs->add_option("--seed", sn.seed);
    split_nfs->add_option("--max-trials", sn.max_trials);
    split_nfs->add_option("--workers", sn.workers);
    split_nfs->add_flag("--timing", sn.timing);
    split_nfs->add_option("--output", sn.output);

    CompressArgs cp;
    auto* compress = app.add_subcommand("compress-p6");
    compress->add_option("--field", cp.field)->required()->check(CLI::ExistingFile);
    compress->add_option("--target", cp.target)->required()->check(CLI::ExistingFile);
    compress->add_option("--poly", cp.poly)->required()->check(CLI::ExistingFile);
    compress->add_option("--b1", cp.b1);
    compress->add_option("--t", cp.t);
    compress->add_option("--seed", cp.seed);
    compress->add_option("--max-trials", cp.max_trials);
    compress->add_option("--backend", cp.backend);
    compress->add_option("--workers", cp.workers);
    compress->add_flag("--timing", cp.timing);
    compress->add_option("--output", cp.output);

    EasBenchArgs eb;
    auto* eas_bench = app.add_subcommand("eas-bench");
    eas_bench->add_option("--bits", eb.bits);
    eas_bench->add_option("--k", eb.k);
    eas_bench->add_option("--e", eb.e);
    eas_bench->add_option("--samples", eb.samples);
    eas_bench->add_option("--seed", eb.seed);
    eas_bench->add_option("--b1", eb.b1);
    eas_bench->add_option("--backend", eb.backend);
    eas_bench->add_option("--output", eb.output);

    std::string fixture_name, fixture_dir;
    auto* verify = app.add_subcommand("verify-fixture");
    verify->add_option("--name", fixture_name)->required();
    verify->add_option("--fixtures", fixture_dir);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (probtable->parsed())
            return cmd_probtable(pt, out);
        if (split_small->parsed())
            return cmd_split_small(ss, out);
        if (split_nfs->parsed())
            return cmd_split_nfs(sn, out);
        if (compress->parsed())
            return cmd_compress(cp, out);
        if (eas_bench->parsed())
            return cmd_eas_bench(eb, out);
        if (verify->parsed())
            return cmd_verify(fixture_name, fixture_dir, out);
        throw UsageError("no command");
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::BudgetExhausted || e.code() == Errc::NoSolution ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace subsplit::cli
