#pragma once

#include "subsplit/bigint.hpp"

#include <cstdint>

namespace subsplit {

uint64_t mix64(uint64_t x);

// Stateless stream keyed by (seed, stream): the i-th output depends only on
// the key and i, so trial ranges can be split across workers freely.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream) : key_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}
    uint64_t next() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // Uniform in [0, n) by rejection sampling on the bit length of n.
    Int below(const Int& n);

private:
    uint64_t key_;
    uint64_t ctr_ = 0;
};

// Exponent t uniform in [1, ell - 1] for the given trial.
Int draw_exponent(uint64_t seed, uint64_t trial, const Int& ell);

} // namespace subsplit
