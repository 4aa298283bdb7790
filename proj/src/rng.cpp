#include "subsplit/rng.hpp"
#include "subsplit/error.hpp"

namespace subsplit {

uint64_t mix64(uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Int CounterRng::below(const Int& n)
{
    if (n <= 0)
        throw Error(Errc::BadParameters, "empty sampling range");
    size_t bits = bit_length(n);
    for (;;) {
        Int r = 0;
        size_t have = 0;
        while (have < bits) {
            r <<= 32;
            r += Int(static_cast<unsigned long>(next() >> 32));
            have += 32;
        }
        r >>= static_cast<unsigned long>(have - bits);
        if (r < n)
            return r;
    }
}

Int draw_exponent(uint64_t seed, uint64_t trial, const Int& ell)
{
    if (ell < 2)
        throw Error(Errc::BadParameters, "ell must be at least 2");
    CounterRng rng(seed, trial);
    return rng.below(ell - 1) + 1;
}

} // namespace subsplit
