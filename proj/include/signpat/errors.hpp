#pragma once

#include <stdexcept>
#include <string>

namespace signpat {

/// A caller violated an operation's precondition (bad order, degree, counts).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Target polynomial lies outside the a3/a5 > 0 hypothesis of the general
/// 6x6 T realizer.
class GateError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Aberth iteration failed to bring every residual under tolerance.
class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

/// Root multiset is not closed under conjugation, or has odd size where an
/// even one is needed.
class ConjugacyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace signpat
