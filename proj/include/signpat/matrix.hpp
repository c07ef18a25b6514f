#pragma once

#include "signpat/errors.hpp"
#include "signpat/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace signpat {

/// Dense square matrix, row-major, immutable after construction.
template <typename Scalar>
class Matrix {
public:
    using value_type = Scalar;

    /// Takes ownership of n*n entries in row-major order.
    Matrix(std::size_t n, std::vector<Scalar> entries)
        : n_(n), entries_(std::move(entries))
    {
        if (n_ == 0)
            throw PreconditionError("matrix order must be at least 1");
        if (entries_.size() != n_ * n_)
            throw PreconditionError("matrix needs n*n entries, got " + std::to_string(entries_.size()));
        if constexpr (std::is_floating_point_v<Scalar>) {
            for (const auto& e : entries_)
                if (!std::isfinite(e))
                    throw PreconditionError("float matrix entries must be finite");
        }
    }

    static Matrix zero(std::size_t n) { return Matrix(n, std::vector<Scalar>(n * n, Scalar(0))); }

    static Matrix identity(std::size_t n)
    {
        std::vector<Scalar> e(n * n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i)
            e[i * n + i] = Scalar(1);
        return Matrix(n, std::move(e));
    }

    std::size_t order() const noexcept { return n_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const Scalar> entries() const noexcept { return entries_; }

    /// Copy with a single entry replaced.
    Matrix with_entry(std::size_t i, std::size_t j, Scalar value) const
    {
        auto e = entries_;
        e.at(i * n_ + j) = std::move(value);
        return Matrix(n_, std::move(e));
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_;
    std::vector<Scalar> entries_;
};

using RationalMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<double>;

/// Block-diagonal assembly with exact-zero off-block entries.
template <typename Scalar>
Matrix<Scalar> block_diag(std::span<const Matrix<Scalar>> blocks)
{
    if (blocks.empty())
        throw PreconditionError("block_diag needs at least one block");
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += b.order();
    std::vector<Scalar> e(n * n, Scalar(0));
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        const std::size_t k = b.order();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                e[(offset + i) * n + offset + j] = b(i, j);
        offset += k;
    }
    return Matrix<Scalar>(n, std::move(e));
}

template <typename Scalar>
Matrix<Scalar> block_diag(const std::vector<Matrix<Scalar>>& blocks)
{
    return block_diag(std::span<const Matrix<Scalar>>(blocks));
}

/// Finest partition of {0..n-1} into contiguous index ranges such that every
/// entry outside the diagonal blocks is exactly zero. Returned as block sizes.
template <typename Scalar>
std::vector<std::size_t> diagonal_block_sizes(const Matrix<Scalar>& m)
{
    const std::size_t n = m.order();
    // reach[i]: largest column/row index coupled to index i.
    std::vector<std::size_t> reach(n);
    for (std::size_t i = 0; i < n; ++i) {
        reach[i] = i;
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) != Scalar(0) || m(j, i) != Scalar(0))
                reach[i] = std::max(reach[i], j);
    }
    std::vector<std::size_t> sizes;
    std::size_t start = 0;
    std::size_t end = 0;
    for (std::size_t i = 0; i < n; ++i) {
        end = std::max(end, reach[i]);
        if (end == i) {
            sizes.push_back(i + 1 - start);
            start = i + 1;
            end = i + 1;
        }
    }
    return sizes;
}

/// Principal submatrix on indices [offset, offset + size).
template <typename Scalar>
Matrix<Scalar> principal_block(const Matrix<Scalar>& m, std::size_t offset, std::size_t size)
{
    std::vector<Scalar> e;
    e.reserve(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            e.push_back(m(offset + i, offset + j));
    return Matrix<Scalar>(size, std::move(e));
}

FloatMatrix to_float(const RationalMatrix& m);
RationalMatrix to_rational(const FloatMatrix& m);

}  // namespace signpat
