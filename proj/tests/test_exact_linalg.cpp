#include <doctest.h>

#include <random>

#include "homcalc/modp.hpp"
#include "homcalc/snf.hpp"

using namespace homcalc;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-9, 9);
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

bool divisibility_chain(const std::vector<Int>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0) return false;
        if (d[i] == 0 && d[i + 1] != 0) return false;
        if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form on the frozen examples") {
    SUBCASE("identity") {
        SmithDecomposition s = smith_normal_form(IntegerMatrix::identity(2));
        CHECK(s.diagonal == std::vector<Int>{1, 1});
        CHECK(s.left == IntegerMatrix::identity(2));
        CHECK(s.right == IntegerMatrix::identity(2));
    }
    SUBCASE("zero 1x1") {
        SmithDecomposition s = smith_normal_form(IntegerMatrix{{Int(0)}});
        CHECK(s.diagonal == std::vector<Int>{0});
    }
    SUBCASE("2x2 with determinant 8") {
        IntegerMatrix m{{2, 4}, {6, 8}};
        // Oracle: d1 is the gcd of the entries, d1*d2 the |determinant|.
        Int g = gcd_int(gcd_int(2, 4), gcd_int(6, 8));
        Int det = abs_int(Int(2) * 8 - Int(4) * 6);
        SmithDecomposition s = smith_normal_form(m);
        REQUIRE(s.diagonal.size() == 2);
        CHECK(s.diagonal[0] == g);
        CHECK(s.diagonal[0] * s.diagonal[1] == det);
        CHECK(s.diagonal == std::vector<Int>{2, 4});
    }
}

TEST_CASE("smith decomposition invariants on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        IntegerMatrix m = random_matrix(rng, rows, cols);
        SmithDecomposition s = smith_normal_form(m);

        CHECK(divisibility_chain(s.diagonal));
        CHECK(s.left.mul(m).mul(s.right) == s.diagonal_matrix(rows, cols));
        // Integer inverses certify |det| = 1.
        CHECK(s.left.mul(s.left_inv) == IntegerMatrix::identity(rows));
        CHECK(s.right.mul(s.right_inv) == IntegerMatrix::identity(cols));
        // Reconstruction through the inverses reproduces the input exactly.
        CHECK(s.left_inv.mul(s.diagonal_matrix(rows, cols)).mul(s.right_inv) == m);
        // Determinism.
        CHECK(smith_normal_form(m).diagonal == s.diagonal);
    }
}

TEST_CASE("smith normal form stays exact with large entries") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> entry(-1000000007LL, 1000000007LL);
    for (int trial = 0; trial < 5; ++trial) {
        IntegerMatrix m(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = entry(rng);
        SmithDecomposition s = smith_normal_form(m);
        CHECK(s.left.mul(m).mul(s.right) == s.diagonal_matrix(6, 6));
        CHECK(s.left.mul(s.left_inv) == IntegerMatrix::identity(6));
        CHECK(s.right.mul(s.right_inv) == IntegerMatrix::identity(6));
        CHECK(divisibility_chain(s.diagonal));
    }
}

TEST_CASE("kernel basis frozen examples") {
    CHECK(kernel_basis(IntegerMatrix{{1, 1}}) == std::vector<Vec>{{1, -1}});
    CHECK(kernel_basis(IntegerMatrix{{2, 4}}) == std::vector<Vec>{{2, -1}});
    CHECK(kernel_basis(IntegerMatrix::identity(3)).empty());
}

TEST_CASE("kernel basis properties") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
        IntegerMatrix m = random_matrix(rng, rows, cols);
        std::vector<Vec> basis = kernel_basis(m);

        for (const Vec& v : basis) {
            CHECK(is_zero_vec(m.mul_vec(v)));
            CHECK(content(v) == 1);
        }
        CHECK(basis.size() == cols - rank_rational(m));
        if (!basis.empty()) {
            IntegerMatrix b = IntegerMatrix::from_rows(basis, cols);
            CHECK(rank_rational(b) == basis.size());
            // Saturation: the basis lattice is a direct summand, i.e. all
            // invariant factors are 1.
            for (const Int& d : smith_normal_form(b).diagonal) CHECK(d == 1);
        }
    }
}

TEST_CASE("cokernel structure") {
    SUBCASE("diag(2,3) collapses to Z/6") {
        AbelianGroupStructure g = cokernel(IntegerMatrix{{2, 0}, {0, 3}});
        CHECK(g.free_rank == 0);
        CHECK(g.torsion == std::vector<Int>{6});
    }
    SUBCASE("zero map has free cokernel") {
        AbelianGroupStructure g = cokernel(IntegerMatrix{{Int(0)}});
        CHECK(g.free_rank == 1);
        CHECK(g.torsion.empty());
    }
    SUBCASE("unit map has trivial cokernel") {
        CHECK(cokernel(IntegerMatrix{{Int(1)}}).trivial());
    }
}

TEST_CASE("content") {
    CHECK(content({2, 4, 6}) == 2);
    CHECK(content({0, 0}) == 0);
    CHECK(content({3, 5}) == 1);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 40; ++trial) {
        Vec v(1 + rng() % 5);
        for (Int& x : v) x = entry(rng);
        Int k = entry(rng);
        CHECK(content(scaled(v, k)) == abs_int(k) * content(v));
    }
}

TEST_CASE("rank over prime fields") {
    CHECK(rank_mod_p(IntegerMatrix{{2, 4}, {6, 8}}, 2) == 0);
    CHECK(rank_mod_p(IntegerMatrix::identity(3), 5) == 3);
    CHECK(rank_mod_p(IntegerMatrix{{Int(3)}}, 3) == 0);
    CHECK_THROWS_AS(rank_mod_p(IntegerMatrix::identity(2), 6), InvalidInput);

    // Two routes: direct elimination mod p versus the Smith diagonal.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        IntegerMatrix m = random_matrix(rng, rows, cols);
        SmithDecomposition s = smith_normal_form(m);
        std::size_t qrank = 0;
        for (const Int& d : s.diagonal)
            if (d != 0) ++qrank;
        CHECK(rank_rational(m) == qrank);
        for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
            std::size_t expect = 0;
            for (const Int& d : s.diagonal)
                if (d % p != 0) ++expect;
            CHECK(rank_mod_p(m, p) == expect);
        }
    }
}

TEST_CASE("prime helpers") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(97)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(91)));
    CHECK(prime_divisors(Int(360)) == std::vector<Int>{2, 3, 5});
    CHECK(prime_divisors(Int(1)).empty());
    CHECK(prime_divisors(Int(-6)) == std::vector<Int>{2, 3});
}
