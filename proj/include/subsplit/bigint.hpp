#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subsplit {

using Int = mpz_class;
using Rational = mpq_class;

// Parses an optionally signed decimal integer. Throws Error(InvalidInput).
Int parse_int(std::string_view s);
std::string to_string(const Int& a);

// Nonnegative residue of a modulo m (m > 0).
Int mod(const Int& a, const Int& m);
Int pow(const Int& base, unsigned long e);
Int powm(const Int& base, const Int& e, const Int& m);
size_t bit_length(const Int& a);

// log2 |a|; returns -infinity for a = 0. Accurate for arbitrarily large a.
double log2_abs(const Int& a);
double log2_rational(const Rational& r);

// Miller-Rabin. Deterministic for n < 2^64, 64 pseudo-random rounds above.
bool is_probable_prime(const Int& n, int rounds = 64);
bool is_prime_u64(uint64_t n);

// Multiplicative helpers over small integers.
int moebius(long n);
std::vector<long> divisors(long n);
std::vector<std::pair<long, int>> factor_small(long n);
long gcd_long(long a, long b);

// Phi_n(p) evaluated exactly.
Int cyclotomic_value(long n, const Int& p);

// Exact binomial coefficient.
Int binomial(unsigned long n, unsigned long k);

} // namespace subsplit
