#pragma once

#include <vector>

#include "homcalc/matrix.hpp"

namespace homcalc {

/// left * original * right == diag(diagonal), with left and right
/// unimodular and d1 | d2 | ... ; left_inv/right_inv are the exact
/// inverses, so original == left_inv * diag * right_inv.
struct SmithDecomposition {
    IntegerMatrix left;
    IntegerMatrix right;
    IntegerMatrix left_inv;
    IntegerMatrix right_inv;
    std::vector<Int> diagonal;  // length min(rows, cols), nonnegative

    IntegerMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
    std::size_t rank() const;
};

/// Free rank plus torsion coefficients in divisibility order (each > 1).
struct AbelianGroupStructure {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroupStructure&) const = default;
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

/// Smith normal form. Pivot rule: smallest absolute value among the
/// remaining nonzero entries, row-major tie-break, so the output is
/// deterministic for a fixed input.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Basis of the integer kernel of m. A matrix kernel is saturated as a
/// sublattice of the domain; each basis vector is additionally reduced
/// by its content and sign-normalized (first nonzero entry positive).
std::vector<Vec> kernel_basis(const IntegerMatrix& m);

/// Structure of Z^rows / im(m), read off the Smith diagonal.
AbelianGroupStructure cokernel(const IntegerMatrix& m);

std::size_t rank_rational(const IntegerMatrix& m);

/// Rank of m over the field with p elements; rejects non-prime p.
std::size_t rank_mod_p(const IntegerMatrix& m, const Int& p);

}  // namespace homcalc
