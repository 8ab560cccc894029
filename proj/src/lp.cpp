#include "homcalc/lp.hpp"

#include <cstddef>

namespace homcalc {

namespace {

// Standard phase-one tableau: artificial basis, minimize the sum of
// artificials; Bland's rule guarantees termination.
class PhaseOneSimplex {
  public:
    PhaseOneSimplex(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b)
        : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
        tableau_.assign(m_ + 1, std::vector<Rat>(n_ + m_ + 1, Rat(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rat sign = b[i] < 0 ? Rat(-1) : Rat(1);
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = sign * a[i][j];
            tableau_[i][n_ + i] = 1;
            tableau_[i][n_ + m_] = sign * b[i];
            basis_[i] = n_ + i;
        }
        // Objective row: sum of artificial rows, negated.
        for (std::size_t j = 0; j <= n_ + m_; ++j) {
            Rat s(0);
            for (std::size_t i = 0; i < m_; ++i) s += tableau_[i][j];
            tableau_[m_][j] = -s;
        }
        for (std::size_t i = 0; i < m_; ++i) tableau_[m_][n_ + i] = 0;
    }

    bool feasible() {
        for (;;) {
            std::size_t pivot_col = n_ + m_;
            for (std::size_t j = 0; j < n_ + m_; ++j)
                if (tableau_[m_][j] < 0) {
                    pivot_col = j;  // Bland: smallest index
                    break;
                }
            if (pivot_col == n_ + m_) break;

            std::size_t pivot_row = m_;
            Rat best_ratio(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (tableau_[i][pivot_col] <= 0) continue;
                Rat ratio = tableau_[i][n_ + m_] / tableau_[i][pivot_col];
                if (pivot_row == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[pivot_row])) {
                    pivot_row = i;
                    best_ratio = ratio;
                }
            }
            if (pivot_row == m_) break;  // unbounded column; cannot happen in phase one
            pivot(pivot_row, pivot_col);
        }
        return -tableau_[m_][n_ + m_] == 0;
    }

  private:
    void pivot(std::size_t r, std::size_t c) {
        Rat p = tableau_[r][c];
        for (auto& v : tableau_[r]) v /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || tableau_[i][c] == 0) continue;
            Rat f = tableau_[i][c];
            for (std::size_t j = 0; j <= n_ + m_; ++j) tableau_[i][j] -= f * tableau_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t m_, n_;
    std::vector<std::vector<Rat>> tableau_;
    std::vector<std::size_t> basis_;
};

}  // namespace

bool rational_system_feasible(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw InvalidInput("LP row count mismatch");
    if (a.empty()) return true;
    return PhaseOneSimplex(a, b).feasible();
}

bool in_convex_hull(const std::vector<Vec>& points, const Vec& target) {
    if (points.empty()) return false;
    std::size_t dim = target.size();
    // Rows: one per coordinate plus the convexity row sum(lambda) = 1.
    std::vector<std::vector<Rat>> a(dim + 1, std::vector<Rat>(points.size()));
    std::vector<Rat> b(dim + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != dim) throw InvalidInput("hull point dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) a[i][j] = Rat(points[j][i]);
        a[dim][j] = 1;
    }
    for (std::size_t i = 0; i < dim; ++i) b[i] = Rat(target[i]);
    b[dim] = 1;
    return rational_system_feasible(a, b);
}

}  // namespace homcalc
