#pragma once

#include <stdexcept>
#include <string>

namespace opgf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rational division by zero. Never a sentinel value.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Series division where the divisor's constant term is not invertible.
struct NonUnitConstantTerm : Error {
    NonUnitConstantTerm() : Error("series division: constant term is not a unit") {}
};

/// Composition or exp where the inner series has a nonzero constant term.
struct InnerConstantTermNonzero : Error {
    InnerConstantTermNonzero() : Error("inner series must have zero constant term") {}
};

/// log/powq where the argument's constant term is not 1.
struct ConstantTermNotOne : Error {
    ConstantTermNotOne() : Error("series constant term must be 1") {}
};

/// A lower hypergeometric parameter hits a nonpositive integer within the
/// truncation range, so some term would divide by zero.
struct DenominatorParameterPole : Error {
    int index;
    explicit DenominatorParameterPole(int idx)
        : Error("hypergeometric denominator parameter pole at term index " + std::to_string(idx)),
          index(idx) {}
};

/// A recurrence-parameter rule is singular at some index n.
struct ParameterPole : Error {
    int n;
    explicit ParameterPole(int n_, const std::string& what) : Error(what), n(n_) {}
};

/// alpha[n] vanished where a coefficient ratio needs to divide by it.
struct ZeroAlpha : Error {
    int n;
    explicit ZeroAlpha(int n_) : Error("alpha[" + std::to_string(n_) + "] is zero"), n(n_) {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& why) : Error("invalid parameters: " + why) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& why) : Error("config error: " + why) {}
};

}  // namespace opgf
