#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "homcalc/ints.hpp"

namespace homcalc {

/// Dense matrix over the integers, row-major, arbitrary precision.
/// All arithmetic is exact; operations return fresh values.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    IntegerMatrix mul(const IntegerMatrix& other) const;
    Vec mul_vec(const Vec& v) const;
    IntegerMatrix transpose() const;
    IntegerMatrix negated() const;

    /// Rows of this stacked above rows of other (equal column counts).
    IntegerMatrix vstack(const IntegerMatrix& other) const;
    /// Columns of this followed by columns of other (equal row counts).
    IntegerMatrix hstack(const IntegerMatrix& other) const;
    IntegerMatrix submatrix_rows(std::size_t first, std::size_t count) const;

    bool operator==(const IntegerMatrix& other) const = default;

    // In-place elementary operations used by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t i, std::size_t k);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

Int dot(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Int& c);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

}  // namespace homcalc
