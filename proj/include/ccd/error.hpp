#pragma once

#include <stdexcept>
#include <string>

namespace ccd {

// Stable failure kinds for precondition violations. The CLI maps these to a
// machine-readable error object and exit code 2; everything else (logic bugs,
// falsified invariants) surfaces as std::logic_error and is never expected.
enum class Errc {
    cap_exceeded,
    not_prime,
    division_by_zero,
    tower_mismatch,
    invalid_levels,
    not_a_divisor,
    not_coprime,
    level_mismatch,
    invalid_r,
    rank_deficient,
    length_mismatch,
    budget_exceeded,
    unsupported_q,
    zero_code,
    dimension_mismatch,
    invalid_regime,
    shift_constant_equal,
    locality_undefined,
    not_odd,
    bad_argument,
};

inline const char* errc_name(Errc k) {
    switch (k) {
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::not_prime: return "NotPrime";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::tower_mismatch: return "TowerMismatch";
        case Errc::invalid_levels: return "InvalidLevels";
        case Errc::not_a_divisor: return "NotADivisor";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::level_mismatch: return "LevelMismatch";
        case Errc::invalid_r: return "InvalidR";
        case Errc::rank_deficient: return "RankDeficient";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::unsupported_q: return "UnsupportedQ";
        case Errc::zero_code: return "ZeroCode";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::invalid_regime: return "InvalidRegime";
        case Errc::shift_constant_equal: return "ShiftConstantEqual";
        case Errc::locality_undefined: return "LocalityUndefined";
        case Errc::not_odd: return "NotOdd";
        case Errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}
    Errc kind() const { return kind_; }

private:
    Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, Errc kind, const std::string& what) {
    if (!ok) fail(kind, what);
}

// Internal invariants ("asserted" postconditions). A failure here means a
// construction bug or a falsified theorem, not bad user input.
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("internal invariant violated: " + what);
}

}  // namespace ccd
