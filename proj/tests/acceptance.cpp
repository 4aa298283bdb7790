#include "subsplit/cli.hpp"
#include "subsplit/error.hpp"
#include "subsplit/factor.hpp"
#include "subsplit/oracle.hpp"
#include "subsplit/probability.hpp"
#include "subsplit/rng.hpp"
#include "subsplit/serialize.hpp"
#include "subsplit/smoothness.hpp"
#include "subsplit/split_nfs.hpp"
#include "subsplit/split_small.hpp"
#include "subsplit/tower.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace subsplit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

json fixture(const std::string& name)
{
    return load_json_file(std::string(SUBSPLIT_FIXTURE_DIR) + "/" + name + ".json");
}

FieldTower make_tower(const Int& p, int n1, int n2)
{
    FieldSpec s;
    s.p = p;
    s.n1 = n1;
    s.n2 = n2;
    return tower_from_spec(s);
}

TowerElement random_generic(const FieldTower& T, CounterRng& rng)
{
    for (;;) {
        TowerElement a = T.K.from_index(rng.below(T.K.order() - 1) + 1);
        if (!in_proper_subfield(T, a))
            return a;
    }
}

std::vector<long> primes_up_to(long n)
{
    std::vector<long> out;
    for (long p = 2; p <= n; ++p)
        if (is_probable_prime(Int(p)))
            out.push_back(p);
    return out;
}

std::vector<int> proper_divisors(int n)
{
    std::vector<int> out;
    for (int d = 2; d < n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

// Discrete log of a in the order-ell subgroup, base g^cofactor.
Int subgroup_log(const FieldTower& T, const TowerElement& a)
{
    Int cof = T.cofactor();
    return bsgs_log(T.K, T.K.pow(T.g, cof), T.K.pow(a, cof), T.ell);
}

// Printed probability rows from a fixture: every row within its tolerance.
Outcome table_rows(const json& fx, const Int& q, int* fails_out, std::map<std::string, double>* values)
{
    int b_max = 0, d_max = 0;
    for (const auto& row : fx.at("table")) {
        b_max = std::max(b_max, row.at("b").get<int>());
        d_max = std::max(d_max, row.at("d").get<int>());
    }
    SmoothCountTable table(q, b_max, d_max);
    int fails = 0, rows = 0;
    double worst = 0;
    std::string worst_row;
    for (const auto& row : fx.at("table")) {
        int b = row.at("b").get<int>(), d = row.at("d").get<int>();
        std::string kind = row.at("kind").get<std::string>();
        double v = kind == "pair" ? paired_log2(table, b, d, d) : table.log2_prob(b, d);
        double printed = row.at("log2").get<double>();
        double dev = std::fabs(v - printed);
        (*values)[kind + "_b" + std::to_string(b)] = v;
        ++rows;
        if (dev > row.at("tol").get<double>())
            ++fails;
        if (dev > worst) {
            worst = dev;
            worst_row = kind + " d=" + std::to_string(d) + " b=" + std::to_string(b) + " computed " +
                        fmt("%.3f", v) + " printed " + fmt("%.2f", printed);
        }
    }
    *fails_out = fails;
    return {fails == 0, std::to_string(rows - fails) + "/" + std::to_string(rows) +
                            " rows within 0.05, worst |diff| " + fmt("%.3f", worst) + " (" + worst_row + ")"};
}

Outcome criterion1()
{
    auto t0 = Clock::now();
    json fx = fixture("sec43");
    int fails = 0;
    std::map<std::string, double> values;
    Outcome o = table_rows(fx, Int(729), &fails, &values);
    std::set<int> pair_b, single_b;
    for (const auto& row : fx.at("table"))
        (row.at("kind") == "pair" ? pair_b : single_b).insert(row.at("b").get<int>());
    bool covered = pair_b.size() == 27 && *pair_b.begin() == 36 && *pair_b.rbegin() == 62 &&
                   single_b.size() == 21 && *single_b.begin() == 22 && *single_b.rbegin() == 42;
    double secs = seconds_since(t0);
    o.pass = o.pass && covered && secs < 60;
    o.detail += ", rows cover b ranges: " + std::string(covered ? "yes" : "no") + ", " + fmt("%.1f", secs) + " s";
    return o;
}

Outcome criterion2()
{
    auto t0 = Clock::now();
    json fx = fixture("sec45");
    int fails = 0;
    std::map<std::string, double> values;
    Outcome o = table_rows(fx, Int(243), &fails, &values);
    double pair = values.at("pair_b24"), single = values.at("single_b24");
    bool order = pair < single;
    o.pass = o.pass && order;
    o.detail += ", crossover b=24 pair " + fmt("%.3f", pair) + " vs single " + fmt("%.3f", single) +
                (order ? " (pair lower, as printed)" : " (wrong order)") + ", " + fmt("%.1f", seconds_since(t0)) +
                " s";
    return o;
}

// Runs verify-fixture and lists the checks that failed.
Outcome run_fixture(const std::string& name)
{
    auto t0 = Clock::now();
    std::ostringstream out, err;
    int code = cli::run({"verify-fixture", "--name", name}, out, err);
    double secs = seconds_since(t0);
    if (code == 2)
        return {false, "verify-fixture error: " + err.str()};
    json rep = json::parse(out.str());
    std::string failed;
    int n = 0;
    for (const auto& [k, v] : rep.at("checks").items()) {
        ++n;
        if (!v.at("ok").get<bool>())
            failed += (failed.empty() ? "" : ",") + k;
    }
    bool pass = code == 0 && failed.empty() && secs < 300;
    return {pass, std::to_string(n) + " checks" + (failed.empty() ? " all ok" : ", failed: " + failed) + ", " +
                      fmt("%.1f", secs) + " s"};
}

Outcome criterion3() { return run_fixture("example1"); }
Outcome criterion4() { return run_fixture("example3"); }

Outcome criterion5()
{
    auto t0 = Clock::now();
    std::vector<long> primes = primes_up_to(101);
    std::vector<int> composite;
    for (int n = 4; n <= 24; ++n)
        if (!proper_divisors(n).empty())
            composite.push_back(n);
    int towers = 0, instances = 0, oracle_checked = 0, failures = 0;
    std::string first_failure;
    auto fail = [&](const std::string& what) {
        if (failures++ == 0)
            first_failure = what;
    };
    for (uint64_t i = 0; towers < 500; ++i) {
        CounterRng rng(5, i);
        long p = primes[rng.next() % primes.size()];
        int n = composite[rng.next() % composite.size()];
        // Desk scale: at most 96 bits of field size.
        if (n * std::log2(static_cast<double>(p)) > 96)
            continue;
        std::vector<int> n1s = {1};
        for (int a : proper_divisors(n))
            n1s.push_back(a);
        int n1 = n1s[rng.next() % n1s.size()];
        FieldTower T = make_tower(Int(p), n1, n / n1);
        ++towers;
        TowerElement target = random_generic(T, rng);
        std::string tag = "p=" + std::to_string(p) + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n / n1);
        for (int d : proper_divisors(n)) {
            ++instances;
            std::string where = tag + " d=" + std::to_string(d);
            int bound = degree_bound(n1, n / n1, d);
            try {
                SubfieldBasis basis = subfield_basis(T, d);
                FqPoly P = reduce_degree(T, target, basis);
                if (P.degree() > bound)
                    fail(where + " degree " + std::to_string(P.degree()));
                TowerElement u = T.K.div(T.K.from_poly(P), target);
                Int pd = pow(Int(p), static_cast<unsigned long>(d));
                if (T.K.is_zero(u) || T.K.pow(u, pd) != u)
                    fail(where + " unit not in subfield");
                if (d * std::log2(static_cast<double>(p)) <= 22) {
                    ++oracle_checked;
                    if (brute_subfield_multiple(T, target, d) > bound)
                        fail(where + " oracle found no multiple within the bound");
                }
            } catch (const std::exception& e) {
                fail(where + " " + e.what());
            }
        }
    }
    return {failures == 0, std::to_string(towers) + " towers, " + std::to_string(instances) + " (tower, d) instances, " +
                               std::to_string(oracle_checked) + " oracle-checked, " + std::to_string(failures) +
                               " failures" + (first_failure.empty() ? "" : " (first: " + first_failure + ")") + ", " +
                               fmt("%.1f", seconds_since(t0)) + " s"};
}

NfsPolySpec lifted_psi(const FieldTower& T)
{
    IntPoly f;
    for (const auto& c : T.K.modulus().c)
        f.push_back(c.empty() ? Int(0) : c[0]);
    return NfsPolySpec::from_poly(0, f);
}

Outcome criterion6()
{
    auto t0 = Clock::now();
    const std::vector<std::pair<int, int>> shapes = {{1, 4}, {1, 6}, {2, 2}, {2, 3}, {3, 2}, {1, 8}, {2, 4}, {4, 2},
                                                     {1, 9}, {3, 3}, {1, 10}, {1, 12}, {2, 6}, {3, 4}, {6, 2}};
    std::vector<long> primes = primes_up_to(4096);
    const Int limit = Int(1) << 30;
    int towers = 0, failures = 0;
    std::map<std::string, int> checks;
    std::string first_failure;
    auto check = [&](const std::string& kind, const FieldTower& T, const TowerElement& image, const Int& want,
                     const std::string& where) {
        ++checks[kind];
        if (subgroup_log(T, image) != want && failures++ == 0)
            first_failure = kind + " " + where;
    };
    for (uint64_t i = 0; towers < 100; ++i) {
        CounterRng rng(6, i);
        auto [n1, n2] = shapes[rng.next() % shapes.size()];
        int n = n1 * n2;
        long p = primes[rng.next() % primes.size()];
        int phi = 0;
        for (int k = 1; k <= n; ++k)
            phi += std::gcd(k, n) == 1;
        if (phi * std::log2(static_cast<double>(p)) > 64 || n * std::log2(static_cast<double>(p)) > 80)
            continue;
        FieldTower T = make_tower(Int(p), n1, n2);
        if (T.ell >= limit || T.ell < 5)
            continue;
        ++towers;
        std::string where = "p=" + std::to_string(p) + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
        TowerElement T0 = random_generic(T, rng);
        Int t = draw_exponent(6, i, T.ell);
        TowerElement target = T.K.mul(T.K.pow(T.g, t), T0);
        Int want = subgroup_log(T, target);
        int d = largest_proper_divisor(n);
        try {
            SubfieldBasis basis = subfield_basis(T, d);
            check("reduce_degree", T, T.K.from_poly(reduce_degree(T, target, basis)), want, where);
            for (const auto& c : double_echelon_candidates(T, target, basis)) {
                TowerElement xe = T.K.pow(T.K.x(), Int(c.e));
                check("double_echelon", T, T.K.mul(xe, T.K.from_poly(c.P)), want, where);
            }
            if (n1 == 1) {
                NfsSplitConfig cfg;
                cfg.d = d;
                cfg.deg_P = n - 1;
                cfg.eas = plain_params(bits_bound(24));
                cfg.backend = SmoothBackend::TrialDivision;
                cfg.seed = i;
                cfg.max_trials = 40;
                try {
                    NfsSplitResult r = split_nfs_search(T, T0, lifted_psi(T), cfg);
                    TowerElement shifted = T.K.mul(T.K.pow(T.g, r.t), T0);
                    check("split_nfs_search", T, bipoly_image(T.K, r.P), subgroup_log(T, shifted), where);
                } catch (const Error& e) {
                    if (e.code() != Errc::BudgetExhausted)
                        throw;
                    ++checks["split_nfs_search exhausted"];
                }
            }
            if (n1 == 1 && n == 6) {
                for (int k = 0; k < 10; ++k) {
                    Int tk = draw_exponent(60, i * 16 + k, T.ell);
                    TowerElement tgt = T.K.mul(T.K.pow(T.g, tk), T0);
                    auto sols = fp6_compress_all(T, tgt);
                    if (sols.empty())
                        continue;
                    Fp6Solution s = fp6_compress(T, tgt);
                    check("fp6_compress", T, bipoly_image(T.K, bi_from_univariate(s.P)), subgroup_log(T, tgt), where);
                    break;
                }
            }
        } catch (const std::exception& e) {
            if (failures++ == 0)
                first_failure = where + " " + e.what();
        }
    }
    std::string counts;
    for (const auto& [k, v] : checks)
        counts += (counts.empty() ? "" : ", ") + k + " " + std::to_string(v);
    return {failures == 0, std::to_string(towers) + " towers, checks: " + counts + "; " + std::to_string(failures) +
                               " failures" + (first_failure.empty() ? "" : " (first: " + first_failure + ")") + ", " +
                               fmt("%.1f", seconds_since(t0)) + " s"};
}

Outcome criterion7()
{
    auto t0 = Clock::now();
    json fx = fixture("example1");
    FieldTower T = tower_from_spec(field_spec_from_json(fx.at("field")));
    TowerElement T0 = element_from_json(T.K, fx.at("target"));
    int d = fx.at("d").get<int>(), deg_P = fx.at("deg_P").get<int>();
    NfsPolySpec spec = NfsPolySpec::from_poly(0, int_poly_from_json(fx.at("f0")));
    SubfieldBasis basis = subfield_basis(T, d);
    double bound = coefficient_bound_log2(T, d, deg_P);
    int trials = 200, rows = 0, violations = 0, first_row_violations = 0;
    std::map<int, int> by_row;
    double worst = -1e9;
    for (int i = 0; i < trials; ++i) {
        Int t = draw_exponent(7, static_cast<uint64_t>(i), T.ell);
        TowerElement target = T.K.mul(T.K.pow(T.g, t), T0);
        NfsTrial tr = nfs_trial(T, target, basis, spec, deg_P);
        for (size_t r = 0; r < tr.rows.size(); ++r) {
            if (T.K.is_zero(bipoly_image(T.K, tr.rows[r])))
                continue;
            ++rows;
            Int m = 0;
            for (const auto& c : tr.rows[r].c)
                for (const auto& a : c)
                    if (abs(a) > m)
                        m = abs(a);
            worst = std::max(worst, log2_abs(m) - bound);
            if (!tr.bound_ok[r]) {
                ++violations;
                ++by_row[static_cast<int>(r)];
                if (r == 0)
                    ++first_row_violations;
            }
        }
    }
    std::string rows_hit;
    for (const auto& [r, c] : by_row)
        rows_hit += (rows_hit.empty() ? "" : ", ") + std::string("row ") + std::to_string(r) + ": " + std::to_string(c);
    return {violations == 0,
            std::to_string(trials) + " trials on the Example 1 field, " + std::to_string(rows) + " rows, " +
                std::to_string(violations) + " over the bound" + (rows_hit.empty() ? "" : " (" + rows_hit + ")") +
                ", first-row violations " + std::to_string(first_row_violations) + ", max log2 excess " +
                fmt("%.2f", worst) + ", " + fmt("%.1f", seconds_since(t0)) + " s"};
}

Outcome criterion8()
{
    auto t0 = Clock::now();
    const uint32_t N = 1u << 20;
    std::vector<uint32_t> largest(N, 1);
    for (uint32_t q = 2; q < N; ++q)
        if (largest[q] == 1)
            for (uint32_t m = q; m < N; m += q)
                largest[m] = q;
    int mismatches = 0;
    for (long B : {256L, 4096L}) {
        EasParams params = plain_params(Int(B));
        for (uint32_t m = 1; m < N; ++m) {
            bool smooth = k_eas(Int(static_cast<unsigned long>(m)), params, SmoothBackend::TrialDivision).verdict ==
                          Verdict::Smooth;
            if (smooth != (largest[m] <= B))
                ++mismatches;
        }
    }
    double c = eas_params(1, 1.0, 512).c;
    double want = std::pow(23.0 / 3.0, 2.0 / 3.0) / 3.0;
    bool c_ok = std::fabs(c - want) <= 5e-11 * want;
    int sum_bad = 0;
    for (int k = 0; k <= 8; ++k) {
        Rational s = 0;
        for (const auto& b : eas_params(k, 1.0, 512).params.b)
            s += b;
        if (s != 1)
            ++sum_bad;
    }
    char cbuf[64];
    std::snprintf(cbuf, sizeof cbuf, "%.12f vs %.12f", c, want);
    return {mismatches == 0 && c_ok && sum_bad == 0,
            std::to_string(mismatches) + " mismatches over m < 2^20 at B1 = 2^8, 2^12; c(k=1) " + cbuf + "; " +
                std::to_string(sum_bad) + " of k=0..8 with sum b != 1, " + fmt("%.1f", seconds_since(t0)) + " s"};
}

FqPoly monic(const PolyRing& R, const FqPoly& f)
{
    const BaseField& F = R.field();
    Fe inv = F.inv(f.c.back());
    FqPoly g = f;
    for (auto& c : g.c)
        c = F.mul(c, inv);
    return g;
}

Outcome criterion9()
{
    auto t0 = Clock::now();
    FieldTower T = make_tower(Int(3), 1, 12);
    const PolyRing& R = T.K.ring();
    SubfieldBasis basis = subfield_basis(T, 6);
    SmoothCountTable table(Int(3), 4, 12);
    const int trials = 10000;
    std::vector<TowerElement> targets;
    for (int i = 0; i < trials; ++i) {
        CounterRng rng(9, static_cast<uint64_t>(i));
        targets.push_back(random_generic(T, rng));
    }
    std::vector<FqPoly> subs, us, vs;
    for (const auto& tg : targets) {
        subs.push_back(monic(R, reduce_degree(T, tg, basis)));
        auto [U, V] = waterloo_split(T, tg);
        us.push_back(monic(R, U));
        vs.push_back(monic(R, V));
    }
    bool pass = true;
    std::string detail;
    for (int b = 2; b <= 4; ++b) {
        int sub_ok = 0, w_ok = 0;
        double sub_pred = 0, w_pred = 0;
        for (int i = 0; i < trials; ++i) {
            auto smooth = [&](const FqPoly& f) { return f.degree() <= b || poly_smooth_test(R, f, b, SmoothMode::Verdict).smooth; };
            sub_ok += smooth(subs[i]);
            w_ok += smooth(us[i]) && smooth(vs[i]);
            sub_pred += std::exp2(table.log2_prob(b, subs[i].degree()));
            w_pred += std::exp2(paired_log2(table, b, us[i].degree(), vs[i].degree()));
        }
        double rs = double(sub_ok) / trials, rw = double(w_ok) / trials;
        double ps = sub_pred / trials, pw = w_pred / trials;
        bool ok = rs >= rw && rs <= 3 * ps && rs >= ps / 3 && rw <= 3 * pw && rw >= pw / 3;
        pass = pass && ok;
        detail += "B1=" + std::to_string(b) + ": subfield " + fmt("%.4f", rs) + " (pred " + fmt("%.4f", ps) +
                  "), waterloo " + fmt("%.4f", rw) + " (pred " + fmt("%.4f", pw) + "), ratio " +
                  (rw > 0 ? fmt("%.2f", rs / rw) : std::string("inf")) + (ok ? "" : " [out of range]") + "; ";
    }
    return {pass, detail + std::to_string(trials) + " targets, " + fmt("%.1f", seconds_since(t0)) + " s"};
}

std::string scratch_file(const std::string& name, const json& j)
{
    std::string path = (std::filesystem::temp_directory_path() / ("subsplit_acceptance_" + name)).string();
    std::ofstream(path) << j.dump();
    return path;
}

Outcome criterion10()
{
    auto t0 = Clock::now();
    std::string f312 = scratch_file("f312.json", json{{"p", "3"}, {"n2", 12}});
    std::string t312 = scratch_file("t312.json",
                                    json{{"target", {"1", "2", "0", "1", "1", "0", "2", "1", "0", "0", "1", "2"}}});
    FieldTower T = make_tower(Int(1031), 1, 6);
    json f = json::array();
    for (const auto& c : T.K.modulus().c)
        f.push_back(to_string(c[0]));
    std::string f1031 = scratch_file("f1031.json", field_to_json(T));
    std::string poly = scratch_file("poly1031.json", json{{"f", f}});
    std::string t1031 = scratch_file("t1031.json", json{{"target", {"5", "7", "11", "13", "17", "19"}}});

    const char* strategies[] = {"subfield", "subfield+double", "subfield+double+expand", "waterloo"};
    int runs = 0, differ = 0, successes = 0;
    std::string first;
    auto compare = [&](std::vector<std::string> args, const std::string& tag) {
        std::ostringstream o1, e1, o8, e8;
        auto a1 = args, a8 = args;
        a1.insert(a1.end(), {"--workers", "1"});
        a8.insert(a8.end(), {"--workers", "8"});
        int c1 = cli::run(a1, o1, e1), c8 = cli::run(a8, o8, e8);
        ++runs;
        successes += c1 == 0;
        if (c1 != c8 || o1.str() != o8.str() || c1 == 2) {
            if (differ++ == 0)
                first = tag + (c1 == 2 ? " usage error: " + e1.str() : "");
        }
    };
    for (int s = 0; s < 20; ++s) {
        std::string seed = std::to_string(s);
        compare({"split-small", "--field", f312, "--target", t312, "--b1", "3", "--d", "6", "--seed", seed,
                 "--strategy", strategies[s % 4], "--max-trials", "200"},
                "split-small seed " + seed);
        compare({"split-nfs", "--field", f1031, "--poly", poly, "--target", t1031, "--d", "3", "--deg-p", "5",
                 "--b1", "19", "--seed", seed, "--max-trials", "200"},
                "split-nfs seed " + seed);
    }
    return {differ == 0, std::to_string(runs) + " seeded runs compared at 1 vs 8 workers, " + std::to_string(successes) +
                             " found a split, " + std::to_string(differ) + " differ" +
                             (first.empty() ? "" : " (first: " + first + ")") + ", " +
                             fmt("%.1f", seconds_since(t0)) + " s"};
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8,
                                                            criterion9, criterion10};
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(n))
            continue;
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
