#include "homcalc/modp.hpp"

#include <algorithm>

namespace homcalc {

namespace {

using i64 = std::int64_t;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((__int128)a * b % p); }

// Reduced row echelon over F_p, in place. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<i64>& a, std::size_t rows, std::size_t cols, i64 p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
        i64 inv = mod_inverse(a[r * cols + c], p);
        for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = mulmod(a[r * cols + j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c] == 0) continue;
            i64 f = a[i * cols + c];
            for (std::size_t j = 0; j < cols; ++j) {
                a[i * cols + j] = (a[i * cols + j] - mulmod(f, a[r * cols + j], p) % p + p) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::int64_t mod_reduce(const Int& x, std::int64_t p) {
    Int r = x % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // Fermat; p is prime throughout this module.
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return result;
}

std::vector<std::int64_t> reduce_vec(const Vec& v, std::int64_t p) {
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_reduce(v[i], p);
    return out;
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

ModMatrix::ModMatrix(const IntegerMatrix& m, const Int& p)
    : rows_(m.rows()), cols_(m.cols()), p_(static_cast<std::int64_t>(p)), a_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = mod_reduce(m.at(i, j), p_);
}

ModMatrix::ModMatrix(const std::vector<Vec>& rows, std::size_t cols, const Int& p)
    : rows_(rows.size()), cols_(cols), p_(static_cast<std::int64_t>(p)), a_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols) throw InvalidInput("ragged mod-p row list");
        for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = mod_reduce(rows[i][j], p_);
    }
}

std::size_t ModMatrix::rank() const {
    std::vector<i64> a = a_;
    return rref(a, rows_, cols_, p_).size();
}

std::vector<std::vector<std::int64_t>> ModMatrix::kernel() const {
    std::vector<i64> a = a_;
    std::vector<std::size_t> pivots = rref(a, rows_, cols_, p_);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<i64>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<i64> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            i64 coef = a[r * cols_ + free];
            if (coef != 0) v[pivots[r]] = (p_ - coef) % p_;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool ModMatrix::spans(const std::vector<std::int64_t>& v) const {
    if (v.size() != cols_) throw InvalidInput("span membership dimension mismatch");
    std::vector<i64> a = a_;
    std::size_t base = rref(a, rows_, cols_, p_).size();
    a.insert(a.end(), v.begin(), v.end());
    std::size_t with = rref(a, rows_ + 1, cols_, p_).size();
    return with == base;
}

std::size_t span_dim(const std::vector<std::vector<std::int64_t>>& vecs, std::size_t cols,
                     std::int64_t p) {
    std::vector<i64> a;
    a.reserve(vecs.size() * cols);
    for (const auto& v : vecs) {
        if (v.size() != cols) throw InvalidInput("span_dim dimension mismatch");
        for (i64 x : v) a.push_back(((x % p) + p) % p);
    }
    return rref(a, vecs.size(), cols, p).size();
}

bool spans_equal(const std::vector<std::vector<std::int64_t>>& a,
                 const std::vector<std::vector<std::int64_t>>& b, std::size_t cols,
                 std::int64_t p) {
    std::size_t da = span_dim(a, cols, p);
    std::size_t db = span_dim(b, cols, p);
    if (da != db) return false;
    std::vector<std::vector<i64>> joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    return span_dim(joined, cols, p) == da;
}

}  // namespace homcalc
