#pragma once

#include "subsplit/bigint.hpp"
#include "subsplit/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subsplit {

enum class SmoothBackend {
    TrialDivision,  // complete: the cofactor has no prime factor <= B
    RhoAssisted,    // trial division to 2^20, then short rho and a few ECM curves; may miss factors
};

const char* backend_name(SmoothBackend b);
std::optional<SmoothBackend> parse_backend(const std::string& s);

struct SmoothSplit {
    Int smooth = 1;
    Int cofactor = 1;
    IntFactorization factors;  // primes of the smooth part
};

// m = smooth * cofactor with smooth B-smooth.
SmoothSplit smooth_part(const Int& m, const Int& B, SmoothBackend backend = SmoothBackend::TrialDivision);

// Largest integer whose prime factors all have at most bits+1 bits, i.e. the
// bound for "bits-smooth" in the sense floor(log2 q) <= bits.
Int bits_bound(int bits);

struct EasParams {
    int k = 0;
    std::vector<Rational> theta;  // theta_0 < ... < theta_k = 1
    std::vector<Rational> b;      // b_0 + ... + b_k = 1
    Int B1 = 2;

    void validate() const;
    // floor(B1^theta_i), with B1 itself for the last stage.
    Int stage_bound(int i) const;
};

// Parameters with no early abort: a single complete test against B1.
EasParams plain_params(const Int& B1);

enum class Verdict { Smooth, Aborted, NotSmooth };

struct SmoothnessOutcome {
    Verdict verdict = Verdict::NotSmooth;
    int stage = 0;                // abort stage, or number of stages run
    std::vector<Int> parts;       // s_0, s_1, ...
    Int residual = 1;
    IntFactorization factors;     // filled when smooth
};

// Single early-abort test with scalar theta and b.
SmoothnessOutcome eas(const Int& m, const Int& B1, const Rational& theta, const Rational& b,
                      SmoothBackend backend = SmoothBackend::TrialDivision);

SmoothnessOutcome k_eas(const Int& m, const EasParams& params,
                        SmoothBackend backend = SmoothBackend::TrialDivision);

// True when a > m^(1 - s), decided exactly (s rational in [0, 1]).
bool exceeds_power(const Int& a, const Int& m, const Rational& s);

struct EasDesign {
    EasParams params;
    double c = 0;       // running time L_Q[1/3, c]
    double gamma = 0;   // B1 = L_Q[2/3, gamma]
    double B1_log2 = 0;
    double time_log2 = 0;
};

// theta_i = (4/9)^(k-i), b_i = (8/27)^(k-i) 19/(15 + 4 (8/27)^k) for i < k,
// b_k the remainder; c = (3e)^(1/3) ((15 + 4 (8/27)^k)/19)^(2/3), gamma = e/c.
EasDesign eas_params(int k, double e, double log2_Q);

// Expected cost estimates with the o(1) terms dropped.
double ecm_cost_log2(double e, double log2_Q);               // L_Q[1/3, (3e)^(1/3)]
double k_eas_cost_log2(int k, double e, double log2_Q);

} // namespace subsplit
