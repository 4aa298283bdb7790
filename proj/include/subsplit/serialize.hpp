#pragma once

#include "subsplit/factor.hpp"
#include "subsplit/int_poly.hpp"
#include "subsplit/oracle.hpp"
#include "subsplit/split_nfs.hpp"
#include "subsplit/split_small.hpp"
#include "subsplit/tower.hpp"

#include "json.hpp"

#include <string>

namespace subsplit {

using json = nlohmann::json;

json load_json_file(const std::string& path);

// Integers are read from strings (or small JSON numbers) and always written as strings.
Int int_from_json(const json& j);
json int_to_json(const Int& a);

IntPoly int_poly_from_json(const json& j);
json int_poly_to_json(const IntPoly& a);
json bipoly_to_json(const IntBiPoly& a);

// An array over x whose entries are either coefficient strings (n1 = 1) or
// arrays over y.
std::vector<std::vector<Int>> lists_from_json(const json& j);

FieldSpec field_spec_from_json(const json& j);
json field_to_json(const FieldTower& T);

TowerElement element_from_json(const TowerField& K, const json& j);
json fq_poly_to_json(const FqPoly& a);
json element_to_json(const TowerElement& a);

json factor_list_to_json(const FactorList& fl);
json factorization_to_json(const IntFactorization& f);
json ideals_to_json(const std::vector<PrimeIdeal>& ideals);

NfsPolySpec poly_spec_from_json(const json& j);

json split_result_to_json(const SplitResult& r, const SplitConfig& c);
json nfs_result_to_json(const NfsSplitResult& r);
json fp6_result_to_json(const Fp6SearchResult& r);

} // namespace subsplit
