#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nervelab/errors.hpp"

namespace nervelab {

using Int = boost::multiprecision::cpp_int;

/// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntegerMatrix& other) const = default;

    IntegerMatrix operator*(const IntegerMatrix& other) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row a += c * row b
    void add_row(std::size_t a, std::size_t b, const Int& c);
    /// col a += c * col b
    void add_col(std::size_t a, std::size_t b, const Int& c);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal with a nonnegative
/// divisibility chain d_1 | d_2 | ...
struct SNFDecomposition {
    IntegerMatrix D, U, V;
    std::vector<Int> diagonal() const;
};

/// Deterministic pivot rule: smallest nonzero absolute value, ties broken
/// row-major.
SNFDecomposition smith_normal_form(const IntegerMatrix& M);

/// The nonzero diagonal entries of the Smith form, without computing the
/// transform matrices.
std::vector<Int> invariant_factors(const IntegerMatrix& M);

/// Determinant by integer-preserving elimination; used to check unimodularity.
Int determinant(const IntegerMatrix& M);

}  // namespace nervelab
