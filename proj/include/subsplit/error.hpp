#pragma once

#include <stdexcept>
#include <string>

namespace subsplit {

enum class Errc {
    NotPrime,
    NotIrreducible,
    EllDoesNotDivide,
    GeneratorOrderTooSmall,
    DivisionByZero,
    FieldMismatch,
    ZeroPolynomial,
    TargetInSubfield,
    RankDeficient,
    NoBasisFound,
    BadParameters,
    DimensionMismatch,
    DegreeOutOfRange,
    BudgetExhausted,
    BudgetExceeded,
    NoSolution,
    NotInSubgroup,
    DomainError,
    InvalidInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace subsplit
