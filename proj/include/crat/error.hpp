#pragma once

#include <stdexcept>
#include <string>

namespace crat {

enum class Err {
    MixedRings,
    WrongRing,
    ZeroDivisor,
    UnsupportedRing,
    NotTCM,
    MismatchedI,
    EmptySystem,
    NotContractive,
    ToleranceViolation,
    InexactWitness,
    NotDescending,
    DegenerateDisk,
    PoleInsideDisk,
    DuplicatePoints,
    DegreeBudget,
    Schema,
    Internal,
};

const char* err_name(Err e);

struct CratError : std::runtime_error {
    Err code;
    CratError(Err c, const std::string& what)
        : std::runtime_error(std::string(err_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw CratError(c, what); }

}  // namespace crat
