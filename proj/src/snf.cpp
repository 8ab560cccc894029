#include "homcalc/snf.hpp"

#include <algorithm>
#include <optional>

#include "homcalc/modp.hpp"

namespace homcalc {

IntegerMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntegerMatrix d(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) d.at(i, i) = diagonal[i];
    return d;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const Int& d : diagonal)
        if (d != 0) ++r;
    return r;
}

namespace {

// Accumulates the elementary operations on A into L, R and their inverses,
// keeping L*A_orig*R == A at every step.
struct SnfWork {
    IntegerMatrix a, l, r, li, ri;

    explicit SnfWork(const IntegerMatrix& m)
        : a(m),
          l(IntegerMatrix::identity(m.rows())),
          r(IntegerMatrix::identity(m.cols())),
          li(IntegerMatrix::identity(m.rows())),
          ri(IntegerMatrix::identity(m.cols())) {}

    void row_add(std::size_t dst, std::size_t src, const Int& c) {
        a.add_row_multiple(dst, src, c);
        l.add_row_multiple(dst, src, c);
        li.add_col_multiple(src, dst, -c);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& c) {
        a.add_col_multiple(dst, src, c);
        r.add_col_multiple(dst, src, c);
        ri.add_row_multiple(src, dst, -c);
    }
    void row_swap(std::size_t i, std::size_t k) {
        a.swap_rows(i, k);
        l.swap_rows(i, k);
        li.swap_cols(i, k);
    }
    void col_swap(std::size_t i, std::size_t k) {
        a.swap_cols(i, k);
        r.swap_cols(i, k);
        ri.swap_rows(i, k);
    }
    void row_negate(std::size_t i) {
        a.negate_row(i);
        l.negate_row(i);
        li.negate_col(i);
    }
};

std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntegerMatrix& a,
                                                              std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& v = a.at(i, j);
            if (v == 0) continue;
            Int av = abs_int(v);
            if (!best || av < best_abs) {
                best = {i, j};
                best_abs = av;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    SnfWork w(m);
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            auto pivot = find_pivot(w.a, t);
            if (!pivot) break;  // remaining block is zero
            w.row_swap(t, pivot->first);
            w.col_swap(t, pivot->second);

            // Reduce the pivot column and row; a nonzero remainder becomes a
            // strictly smaller pivot on the next pass.
            bool reduced = true;
            for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
                if (w.a.at(i, t) == 0) continue;
                Int q = w.a.at(i, t) / w.a.at(t, t);
                w.row_add(i, t, -q);
                if (w.a.at(i, t) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
                if (w.a.at(t, j) == 0) continue;
                Int q = w.a.at(t, j) / w.a.at(t, t);
                w.col_add(j, t, -q);
                if (w.a.at(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Divisibility: fold a non-multiple into the pivot row and retry.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < w.a.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < w.a.cols() && divides_all; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (w.a.at(t, t) < 0) w.row_negate(t);
    }

    SmithDecomposition out;
    out.left = std::move(w.l);
    out.right = std::move(w.r);
    out.left_inv = std::move(w.li);
    out.right_inv = std::move(w.ri);
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = w.a.at(i, i);
    return out;
}

std::vector<Vec> kernel_basis(const IntegerMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j < snf.diagonal.size() && snf.diagonal[j] != 0) continue;
        Vec v = snf.right.col(j);
        Int c = content(v);
        if (c > 1)
            for (Int& x : v) x /= c;
        for (const Int& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

AbelianGroupStructure cokernel(const IntegerMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    AbelianGroupStructure g;
    std::size_t nonzero = 0;
    for (const Int& d : snf.diagonal) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = static_cast<long>(m.rows() - nonzero);
    return g;
}

std::size_t rank_rational(const IntegerMatrix& m) {
    return smith_normal_form(m).rank();
}

std::size_t rank_mod_p(const IntegerMatrix& m, const Int& p) {
    if (!is_prime(p)) throw InvalidInput("rank_mod_p: modulus " + to_decimal(p) + " is not prime");
    return ModMatrix(m, p).rank();
}

}  // namespace homcalc
