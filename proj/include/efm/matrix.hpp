#pragma once

#include "efm/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace efm {

/// Row-major dense matrix with exact entries.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Exact basis of the right kernel of M. Each vector is scaled to integer
/// entries with content 1 and a positive first nonzero entry. Empty iff M
/// has full column rank. Pivoting is deterministic (first nonzero entry
/// scanning down each column), so the basis is reproducible.
std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination. Non-square input
/// throws.
Integer det_exact(const IntMatrix& m);

/// Signed minor (-1)^{j+l} det(M without row j and column l), 0-based
/// indices. The minor of a 1x1 matrix is empty, so its cofactor is 1.
Integer cofactor(const IntMatrix& m, std::size_t j, std::size_t l);

std::size_t rank(const IntMatrix& m);

/// Outcome of solving a small square-or-rectangular rational system A x = b.
struct LinearSolve {
    enum class Status { Unique, Inconsistent, Underdetermined };
    Status status;
    std::vector<Rational> x;  // meaningful only when Unique
};

LinearSolve solve_linear(const RatMatrix& a, const std::vector<Rational>& b);

/// Multiplies each row by the lcm of its denominators.
IntMatrix clear_row_denominators(const RatMatrix& m);

/// Primitive integer vector proportional to v (content 1, first nonzero > 0).
std::vector<Integer> primitive_vector(const std::vector<Rational>& v);

}  // namespace efm
