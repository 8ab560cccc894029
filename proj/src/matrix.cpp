#include "homcalc/matrix.hpp"

#include <algorithm>
#include <utility>

namespace homcalc {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("ragged row list");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec IntegerMatrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<long>(i * cols_),
               a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec IntegerMatrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

IntegerMatrix IntegerMatrix::mul(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw InvalidInput("matrix product dimension mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

Vec IntegerMatrix::mul_vec(const Vec& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix-vector dimension mismatch");
    Vec out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntegerMatrix IntegerMatrix::negated() const {
    IntegerMatrix out = *this;
    for (Int& x : out.a_) x = -x;
    return out;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix& other) const {
    if (cols_ != other.cols_ && other.rows_ != 0 && rows_ != 0)
        throw InvalidInput("vstack column mismatch");
    std::size_t cols = rows_ ? cols_ : other.cols_;
    IntegerMatrix out(rows_ + other.rows_, cols);
    out.a_ = a_;
    out.a_.insert(out.a_.end(), other.a_.begin(), other.a_.end());
    return out;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& other) const {
    if (rows_ != other.rows_) throw InvalidInput("hstack row mismatch");
    IntegerMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

IntegerMatrix IntegerMatrix::submatrix_rows(std::size_t first, std::size_t count) const {
    IntegerMatrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(first + i, j);
    return out;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, k));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += c * at(r, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntegerMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("dot product dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec scaled(const Vec& v, const Int& c) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("vector sum dimension mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InvalidInput("vector difference dimension mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool is_zero_vec(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace homcalc
