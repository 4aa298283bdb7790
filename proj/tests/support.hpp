#pragma once

#include "subsplit/bigint.hpp"
#include "subsplit/rng.hpp"
#include "subsplit/serialize.hpp"
#include "subsplit/tower.hpp"

#include <string>

namespace testing {

using namespace subsplit;

inline json fixture(const std::string& name)
{
    return load_json_file(std::string(SUBSPLIT_FIXTURE_DIR) + "/" + name + ".json");
}

inline FieldTower fixture_tower(const json& fx) { return tower_from_spec(field_spec_from_json(fx.at("field"))); }

// g^t T0 for the fixture's t.
inline TowerElement fixture_target(const FieldTower& T, const json& fx)
{
    TowerElement T0 = element_from_json(T.K, fx.at("target"));
    return T.K.mul(T.K.pow(T.g, parse_int(fx.at("t").get<std::string>())), T0);
}

inline FieldTower small_tower(long p, int n1, int n2)
{
    FieldSpec s;
    s.p = p;
    s.n1 = n1;
    s.n2 = n2;
    return tower_from_spec(s);
}

inline TowerElement random_element(const TowerField& K, CounterRng& rng)
{
    return K.from_index(rng.below(K.order()));
}

inline TowerElement random_nonzero(const TowerField& K, CounterRng& rng)
{
    return K.from_index(rng.below(K.order() - 1) + 1);
}

// A random element outside every proper subfield.
inline TowerElement random_generic(const FieldTower& T, CounterRng& rng)
{
    for (;;) {
        TowerElement a = random_nonzero(T.K, rng);
        if (!in_proper_subfield(T, a))
            return a;
    }
}

inline std::vector<Int> ints(std::initializer_list<long> v)
{
    std::vector<Int> out;
    for (long a : v)
        out.emplace_back(a);
    return out;
}

inline IntPoly random_int_poly(CounterRng& rng, int degree, long bound)
{
    IntPoly a;
    for (int i = 0; i <= degree; ++i)
        a.push_back(Int(static_cast<long>(rng.next() % (2 * bound + 1))) - bound);
    if (a.back() == 0)
        a.back() = 1;
    return a;
}

inline FqPoly random_monic(const PolyRing& R, CounterRng& rng, int degree)
{
    FqPoly f;
    for (int i = 0; i < degree; ++i)
        f.c.push_back(R.field().from_index(rng.below(R.field().order())));
    f.c.push_back(R.field().one());
    return f;
}

} // namespace testing
