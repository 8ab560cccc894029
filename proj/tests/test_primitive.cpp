#include <doctest.h>

#include "homcalc/gen.hpp"
#include "homcalc/modp.hpp"
#include "homcalc/primitive.hpp"

using namespace homcalc;

namespace {

BoundaryPresentation two_torus_blocks(const IntegerMatrix& plus_block,
                                      const IntegerMatrix& minus_block) {
    BoundaryPresentation p;
    p.components = {{1, +1}, {1, -1}};
    p.ambient_rank = static_cast<long>(plus_block.rows());
    p.inclusion = plus_block.hstack(minus_block.negated());
    return p;
}

}  // namespace

TEST_CASE("torsion normalization") {
    SUBCASE("torsion row dropped, rank preserved") {
        BoundaryPresentation p;
        p.components = {{1, +1}, {1, -1}};
        p.ambient_rank = 1;
        p.ambient_torsion = {2};
        p.inclusion = IntegerMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}};
        BoundaryPresentation n = normalize_torsion_free(p);
        CHECK(n.ambient_rank == 1);
        CHECK_FALSE(n.has_torsion());
        CHECK(n.inclusion.rows() == 1);
    }
    SUBCASE("torsion-free input unchanged") {
        BoundaryPresentation p = InstanceGenerator::product(2);
        CHECK(normalize_torsion_free(p).inclusion == p.inclusion);
    }
    SUBCASE("pure torsion collapses to rank zero") {
        BoundaryPresentation p;
        p.components = {{1, +1}, {1, -1}};
        p.ambient_rank = 0;
        p.ambient_torsion = {6};
        p.inclusion = IntegerMatrix{{1, 2, -3, 0}};
        BoundaryPresentation n = normalize_torsion_free(p);
        CHECK(n.ambient_rank == 0);
        CHECK(n.inclusion.rows() == 0);
    }
}

TEST_CASE("excluded primes from cokernel torsion") {
    SUBCASE("products have none") {
        CHECK(excluded_primes(InstanceGenerator::product(1)).primes.empty());
    }
    SUBCASE("a diag(2,1) block plants 2") {
        BoundaryPresentation p =
            two_torus_blocks(IntegerMatrix{{2, 0}, {0, 1}}, IntegerMatrix::identity(2));
        CHECK(excluded_primes(p).primes == std::vector<Int>{2});
    }
    SUBCASE("a diag(6,1) block plants 2 and 3") {
        BoundaryPresentation p =
            two_torus_blocks(IntegerMatrix{{6, 0}, {0, 1}}, IntegerMatrix::identity(2));
        CHECK(excluded_primes(p).primes == std::vector<Int>{2, 3});
    }
    SUBCASE("torsion must be normalized away first") {
        BoundaryPresentation p;
        p.components = {{1, +1}, {1, -1}};
        p.ambient_rank = 1;
        p.ambient_torsion = {2};
        p.inclusion = IntegerMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}};
        CHECK_THROWS_AS(excluded_primes(p), InvalidInput);
    }
}

TEST_CASE("A_p subspaces") {
    SUBCASE("products have trivial A_p") {
        for (long g : {1L, 2L}) {
            BoundaryPresentation p = InstanceGenerator::product(g);
            for (Int q : {Int(2), Int(3)}) {
                ApSubspace a = a_p_subspace(p, q, Side::Plus);
                CHECK(a.dim == 0);
                CHECK(a.genus_bound == g);
            }
        }
    }
    SUBCASE("a scaled identity block blows the genus bound") {
        BoundaryPresentation p = two_torus_blocks(IntegerMatrix{{2, 0}, {0, 2}},
                                                  IntegerMatrix::identity(2));
        CHECK_THROWS_AS(a_p_subspace(p, Int(2), Side::Minus), InvalidPresentation);
    }
    SUBCASE("paired divisors reach the bound") {
        BoundaryPresentation p = InstanceGenerator::paired_divisor(1, {{Int(2), Int(1)}});
        ApSubspace a = a_p_subspace(p, Int(2), Side::Plus);
        CHECK(a.dim == 1);
        CHECK(a.genus_bound == 1);
    }
    SUBCASE("non-prime modulus rejected") {
        CHECK_THROWS_AS(a_p_subspace(InstanceGenerator::product(1), Int(4), Side::Plus),
                        InvalidInput);
    }
}

TEST_CASE("crt lift frozen examples") {
    SUBCASE("two primes") {
        Vec x = crt_lift({2, 3}, {Vec{1, 0}, Vec{2, 1}}, 2);
        CHECK(x == Vec{5, 4});
        // Oracle: coordinatewise exhaustive search over Z/6 confirms
        // existence and uniqueness.
        for (std::size_t c = 0; c < 2; ++c) {
            int found = -1;
            for (int v = 0; v < 6; ++v) {
                bool ok = (v % 2) == (c == 0 ? 1 : 0) && (v % 3) == (c == 0 ? 2 : 1);
                if (ok) {
                    CHECK(found == -1);
                    found = v;
                }
            }
            CHECK(Int(found) == x[c]);
        }
    }
    SUBCASE("single prime returns the residue") {
        CHECK(crt_lift({5}, {Vec{3, 4, 0}}, 3) == Vec{3, 4, 0});
    }
    SUBCASE("zero residues lift to zero") {
        CHECK(crt_lift({2, 3, 5}, {Vec{0}, Vec{0}, Vec{0}}, 1) == Vec{0});
    }
    SUBCASE("duplicate primes rejected") {
        CHECK_THROWS_AS(crt_lift({3, 3}, {Vec{1}, Vec{2}}, 1), InvalidInput);
    }
}

TEST_CASE("kernel element search") {
    SUBCASE("no excluded primes returns the first basis vector") {
        BoundaryPresentation p = InstanceGenerator::product(1);
        KernelSearchResult r = find_kernel_element(p, ExcludedPrimeSet{});
        CHECK(r.element == Vec{1, 0, 1, 0});  // the diagonal a1
        CHECK(content(p.side_slice(Side::Plus, r.element)) == 1);
    }
    SUBCASE("excluded prime 2 forces odd coordinates") {
        BoundaryPresentation p = InstanceGenerator::paired_divisor(1, {{Int(2), Int(1)}});
        ExcludedPrimeSet ex = excluded_primes(p);
        REQUIRE(ex.primes == std::vector<Int>{2});
        KernelSearchResult r = find_kernel_element(p, ex);
        CHECK(content(p.side_slice(Side::Plus, r.element)) % 2 != 0);
        CHECK(content(p.side_slice(Side::Minus, r.element)) % 2 != 0);
        CHECK(is_zero_vec(p.inclusion.mul_vec(r.element)));
    }
    SUBCASE("several excluded primes combine through the lift") {
        BoundaryPresentation p =
            InstanceGenerator::paired_divisor(2, {{Int(2), Int(3)}, {Int(5), Int(1)}});
        ExcludedPrimeSet ex = excluded_primes(p);
        REQUIRE(ex.primes == std::vector<Int>{2, 3, 5});
        KernelSearchResult r = find_kernel_element(p, ex);
        for (const Int& q : ex.primes) {
            CHECK(content(p.side_slice(Side::Plus, r.element)) % q != 0);
            CHECK(content(p.side_slice(Side::Minus, r.element)) % q != 0);
        }
        CHECK(is_zero_vec(p.inclusion.mul_vec(r.element)));
    }
}

TEST_CASE("primitive pair extraction") {
    BoundaryPresentation p = InstanceGenerator::product(1);
    SUBCASE("common content divides out") {
        PrimitivePair pair = extract_primitive_pair(Vec{2, 0, 2, 0}, p, ExcludedPrimeSet{});
        CHECK(pair.c_plus == Vec{1, 0});
        CHECK(pair.c_minus == Vec{1, 0});
        CHECK(pair.multiplier == 1);
    }
    SUBCASE("already primitive passes through") {
        PrimitivePair pair = extract_primitive_pair(Vec{1, 2, 1, 2}, p, ExcludedPrimeSet{});
        CHECK(pair.c_plus == Vec{1, 2});
    }
    SUBCASE("mismatched contents are a presentation diagnostic") {
        CHECK_THROWS_AS(extract_primitive_pair(Vec{2, 0, 3, 0}, p, ExcludedPrimeSet{}),
                        InvalidPresentation);
    }
}

TEST_CASE("full pair search on the worked instances") {
    SUBCASE("product of genus 2") {
        BoundaryPresentation p = InstanceGenerator::product(2);
        PairSearchOutcome o = find_primitive_homologous_pair(p);
        CHECK(o.branch == "kernel-search");
        CHECK(o.pair.c_plus == Vec{1, 0, 0, 0});  // a1
        CHECK(o.pair.c_minus == Vec{1, 0, 0, 0});
        CHECK(o.pair.multiplier == 1);
        CHECK(verify_primitive_pair(p, o.pair).ok());
    }
    SUBCASE("compressed handle lands in the vertical branch") {
        BoundaryPresentation p = InstanceGenerator::compression(2, 1);
        PairSearchOutcome o = find_primitive_homologous_pair(p);
        CHECK(o.branch == "vertical");
        CHECK(o.upsilon_value == 1);
        CHECK(o.pair.multiplier == 1);
        CHECK(verify_primitive_pair(p, o.pair).ok());
    }
    SUBCASE("excluded-prime family") {
        BoundaryPresentation p = InstanceGenerator::paired_divisor(1, {{Int(2), Int(1)}});
        PairSearchOutcome o = find_primitive_homologous_pair(p);
        CHECK(o.excluded.primes == std::vector<Int>{2});
        CHECK(verify_primitive_pair(p, o.pair).ok());
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(find_primitive_homologous_pair(InstanceGenerator::product(0)),
                        InvalidInput);
        BoundaryPresentation lop;
        lop.components = {{2, +1}, {1, -1}};
        lop.ambient_rank = 0;
        lop.inclusion = IntegerMatrix(0, 6);
        CHECK_THROWS_AS(find_primitive_homologous_pair(lop), InvalidInput);
    }
}

TEST_CASE("vertical branch reports the torsion annihilator") {
    // Ambient Z^2 + Z/4; both a-handles die rationally but hit torsion.
    BoundaryPresentation p;
    p.components = {{1, +1}, {1, -1}};
    p.ambient_rank = 2;
    p.ambient_torsion = {4};
    p.inclusion = IntegerMatrix{
        {0, 1, 0, 0},    // b_+ -> P
        {0, 0, 0, -1},   // b_- -> Q
        {1, 0, -3, 0},   // torsion row: a_+ -> 1, a_- -> 3 (mod 4)
    };
    PairSearchOutcome o = find_primitive_homologous_pair(p);
    CHECK(o.branch == "vertical");
    CHECK(o.pair.c_plus == Vec{1, 0});
    CHECK(o.pair.c_minus == Vec{1, 0});
    CHECK(o.pair.multiplier == 4);
    CHECK(verify_primitive_pair(p, o.pair).ok());
}

TEST_CASE("pair search succeeds across the generated corpus") {
    InstanceGenerator gen(31337);
    std::vector<Int> divisors = {2, 3, 5, 7, 11, 6, 35};
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = gen.random_valid(5, divisors);
        PairSearchOutcome o = find_primitive_homologous_pair(inst.presentation, 17);
        PairVerification v = verify_primitive_pair(inst.presentation, o.pair);
        CHECK(v.primitive);
        CHECK(v.homologous);
        for (const Int& q : o.excluded.primes) {
            CHECK(q <= 11);
            CHECK(is_prime(q));
        }
    }
}
