#include "subsplit/serialize.hpp"
#include "subsplit/error.hpp"

#include <fstream>
#include <sstream>

namespace subsplit {

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, path + ": " + e.what());
    }
}

Int int_from_json(const json& j)
{
    if (j.is_string())
        return parse_int(j.get<std::string>());
    if (j.is_number_integer())
        return Int(std::to_string(j.get<long long>()));
    throw Error(Errc::InvalidInput, "expected an integer string, got " + j.dump());
}

json int_to_json(const Int& a) { return to_string(a); }

IntPoly int_poly_from_json(const json& j)
{
    if (!j.is_array())
        throw Error(Errc::InvalidInput, "expected a coefficient array");
    IntPoly a;
    for (const auto& c : j)
        a.push_back(int_from_json(c));
    ipoly::normalize(a);
    return a;
}

json int_poly_to_json(const IntPoly& a)
{
    json j = json::array();
    for (const auto& c : a)
        j.push_back(to_string(c));
    return j;
}

json bipoly_to_json(const IntBiPoly& a)
{
    json j = json::array();
    for (const auto& c : a.c)
        j.push_back(int_poly_to_json(c));
    return j;
}

std::vector<std::vector<Int>> lists_from_json(const json& j)
{
    if (!j.is_array())
        throw Error(Errc::InvalidInput, "expected an array of coefficients");
    std::vector<std::vector<Int>> out;
    for (const auto& c : j) {
        if (c.is_array()) {
            std::vector<Int> ys;
            for (const auto& y : c)
                ys.push_back(int_from_json(y));
            out.push_back(std::move(ys));
        } else {
            out.push_back({int_from_json(c)});
        }
    }
    return out;
}

FieldSpec field_spec_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("p") || !j.contains("n2"))
        throw Error(Errc::InvalidInput, "field spec needs p and n2");
    try {
        FieldSpec s;
        s.p = int_from_json(j.at("p"));
        s.n1 = j.value("n1", 1);
        s.n2 = j.at("n2").get<int>();
        if (j.contains("h"))
            s.h = int_poly_from_json(j.at("h"));
        if (j.contains("psi"))
            s.psi = lists_from_json(j.at("psi"));
        if (j.contains("g"))
            s.g = lists_from_json(j.at("g"));
        if (j.contains("ell"))
            s.ell = int_from_json(j.at("ell"));
        return s;
    } catch (const json::exception& e) {
        throw Error(Errc::InvalidInput, std::string("field spec: ") + e.what());
    }
}

json fq_poly_to_json(const FqPoly& a)
{
    json j = json::array();
    for (const auto& c : a.c) {
        json ys = json::array();
        for (const auto& y : c)
            ys.push_back(to_string(y));
        j.push_back(ys);
    }
    return j;
}

json element_to_json(const TowerElement& a) { return fq_poly_to_json(FqPoly{a.c}); }

json field_to_json(const FieldTower& T)
{
    json j;
    j["p"] = to_string(T.p());
    j["n1"] = T.n1();
    j["n2"] = T.n2();
    if (T.n1() > 1)
        j["h"] = int_poly_to_json(T.K.base().modulus());
    j["psi"] = fq_poly_to_json(T.K.modulus());
    j["g"] = element_to_json(T.g);
    j["ell"] = to_string(T.ell);
    return j;
}

TowerElement element_from_json(const TowerField& K, const json& j)
{
    const json& body = j.is_object() && j.contains("target") ? j.at("target") : j;
    auto lists = lists_from_json(body);
    if (static_cast<int>(lists.size()) > K.degree())
        throw Error(Errc::InvalidInput, "element has more coefficients than n2");
    return element_from_lists(K, lists);
}

json factor_list_to_json(const FactorList& fl)
{
    json j = json::array();
    for (const auto& [f, e] : fl)
        j.push_back({{"poly", fq_poly_to_json(f)}, {"degree", f.degree()}, {"multiplicity", e}});
    return j;
}

json factorization_to_json(const IntFactorization& f)
{
    json j = json::array();
    for (const auto& [q, e] : f)
        j.push_back({{"prime", to_string(q)}, {"multiplicity", e}});
    return j;
}

json ideals_to_json(const std::vector<PrimeIdeal>& ideals)
{
    json j = json::array();
    for (const auto& I : ideals)
        j.push_back({{"prime", to_string(I.prime)}, {"root", to_string(I.root)}, {"multiplicity", I.multiplicity}});
    return j;
}

NfsPolySpec poly_spec_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("f"))
        throw Error(Errc::InvalidInput, "polynomial spec needs f");
    return NfsPolySpec::from_poly(j.value("side", 0), int_poly_from_json(j.at("f")), j.value("family", std::string()));
}

json split_result_to_json(const SplitResult& r, const SplitConfig& c)
{
    json j;
    j["strategy"] = strategy_name(c.strategy);
    j["seed"] = std::to_string(c.seed);
    j["B1"] = c.B1;
    j["d"] = c.d;
    j["t"] = to_string(r.t);
    j["e"] = r.e;
    j["row"] = r.row;
    j["candidate_index"] = r.candidate_index;
    j["slack"] = r.slack;
    j["P"] = fq_poly_to_json(r.P);
    j["degree"] = r.P.degree();
    j["factors"] = factor_list_to_json(r.factors);
    if (c.strategy == SplitStrategy::Waterloo) {
        j["V"] = fq_poly_to_json(r.V);
        j["v_factors"] = factor_list_to_json(r.v_factors);
    }
    j["subfield_unit_checked"] = r.subfield_unit_checked;
    j["trials_used"] = r.trials_used;
    return j;
}

json nfs_result_to_json(const NfsSplitResult& r)
{
    json j;
    j["t"] = to_string(r.t);
    j["row"] = r.row;
    j["P"] = bipoly_to_json(r.P);
    j["pseudonorm"] = to_string(r.pseudonorm);
    j["pseudonorm_bits"] = bit_length(r.pseudonorm);
    j["factors"] = factorization_to_json(r.factors);
    j["ideals"] = ideals_to_json(r.ideals);
    j["coeff_bound_ok"] = r.coeff_bound_ok;
    std::ostringstream cb, bb;
    cb.precision(6);
    bb.precision(6);
    cb << std::fixed << r.coeff_log2;
    bb << std::fixed << r.bound_log2;
    j["coeff_log2"] = cb.str();
    j["bound_log2"] = bb.str();
    j["matrix_fingerprint"] = r.fingerprint;
    j["trials_used"] = r.trials_used;
    return j;
}

json fp6_result_to_json(const Fp6SearchResult& r)
{
    json j;
    j["t"] = to_string(r.t);
    j["u0"] = to_string(r.solution.u0);
    j["u1"] = to_string(r.solution.u1);
    j["v0"] = to_string(r.solution.v0);
    j["w"] = to_string(r.solution.w);
    j["P"] = int_poly_to_json(r.solution.P);
    j["R"] = int_poly_to_json(r.R);
    j["row"] = r.row;
    j["pseudonorm"] = to_string(r.pseudonorm);
    j["pseudonorm_bits"] = bit_length(r.pseudonorm);
    j["factors"] = factorization_to_json(r.factors);
    j["ideals"] = ideals_to_json(r.ideals);
    j["trials_used"] = r.trials_used;
    return j;
}

} // namespace subsplit
