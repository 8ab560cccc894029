#pragma once

#include <cstdint>
#include <vector>

#include "homcalc/matrix.hpp"

namespace homcalc {

/// Row-reducible matrix over F_p for prime p < 2^31.
class ModMatrix {
  public:
    ModMatrix(std::size_t rows, std::size_t cols, std::int64_t p);
    ModMatrix(const IntegerMatrix& m, const Int& p);
    ModMatrix(const std::vector<Vec>& rows, std::size_t cols, const Int& p);

    std::int64_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::size_t rank() const;

    /// Basis of {x : Mx = 0} over F_p in reduced echelon shape,
    /// order fixed by the free-column order.
    std::vector<std::vector<std::int64_t>> kernel() const;

    /// True when v lies in the row span.
    bool spans(const std::vector<std::int64_t>& v) const;

  private:
    std::size_t rows_, cols_;
    std::int64_t p_;
    std::vector<std::int64_t> a_;
};

std::int64_t mod_reduce(const Int& x, std::int64_t p);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

std::vector<std::int64_t> reduce_vec(const Vec& v, std::int64_t p);

/// Dimension of the span of the given F_p row vectors.
std::size_t span_dim(const std::vector<std::vector<std::int64_t>>& vecs, std::size_t cols,
                     std::int64_t p);

/// Equality of spans, decided by three rank computations.
bool spans_equal(const std::vector<std::vector<std::int64_t>>& a,
                 const std::vector<std::vector<std::int64_t>>& b, std::size_t cols,
                 std::int64_t p);

}  // namespace homcalc
