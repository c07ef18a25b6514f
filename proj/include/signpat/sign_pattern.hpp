#pragma once

#include "signpat/errors.hpp"
#include "signpat/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signpat {

enum class Sign : unsigned char { Plus, Zero, Minus };

char to_char(Sign s);
Sign sign_from_char(char c);

template <typename Scalar>
Sign sign_of_entry(const Scalar& x)
{
    const int s = sign_of(x);
    return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero);
}

/// Square grid over {+, 0, -}.
class SignPattern {
public:
    SignPattern(std::size_t n, std::vector<Sign> entries);

    /// One string per row over the alphabet "+-0".
    static SignPattern from_rows(const std::vector<std::string>& rows);

    std::size_t order() const noexcept { return n_; }
    Sign operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::vector<std::string> rows() const;

    friend bool operator==(const SignPattern&, const SignPattern&) = default;

private:
    std::size_t n_;
    std::vector<Sign> entries_;
};

/// Names for the built-in patterns. V(t, d) is diag(T x t, D x d).
struct PatternName {
    enum class Kind { T, Tprime, D, XTemplate, S, Sprime, TD, U1, U2, U3, V };

    Kind kind;
    int t = 0;
    int d = 0;

    static PatternName v(int t, int d) { return {Kind::V, t, d}; }
};

/// Parses "T", "Tprime", "D", "X", "S", "Sprime", "TD", "U1".."U3" and
/// "V(t,d)". Throws PreconditionError for unknown tags.
PatternName parse_pattern_name(std::string_view text);
std::string to_string(const PatternName& name);

SignPattern builtin_pattern(const PatternName& name);

SignPattern block_diag(std::span<const SignPattern> blocks);
SignPattern block_diag(const std::vector<SignPattern>& blocks);

/// Every nonzero entry of q appears in p with the same sign.
bool is_superpattern(const SignPattern& p, const SignPattern& q);

/// Exact sign match at every entry; Zero requires an exact zero.
template <typename Scalar>
bool conforms(const Matrix<Scalar>& m, const SignPattern& p)
{
    if (m.order() != p.order())
        throw PreconditionError("conforms: matrix order " + std::to_string(m.order()) +
                                " differs from pattern order " + std::to_string(p.order()));
    for (std::size_t i = 0; i < p.order(); ++i)
        for (std::size_t j = 0; j < p.order(); ++j)
            if (sign_of_entry(m(i, j)) != p(i, j))
                return false;
    return true;
}

template <typename Scalar>
SignPattern sign_pattern_of(const Matrix<Scalar>& m)
{
    std::vector<Sign> s;
    s.reserve(m.entries().size());
    for (const auto& x : m.entries())
        s.push_back(sign_of_entry(x));
    return SignPattern(m.order(), std::move(s));
}

}  // namespace signpat
