#include <doctest.h>

#include "homcalc/gen.hpp"
#include "homcalc/modp.hpp"
#include "homcalc/primitive.hpp"

using namespace homcalc;

namespace {

BoundaryPresentation two_torus_blocks(const IntegerMatrix& plus_block,
                                      const IntegerMatrix& minus_block) {
    // Stores iota_+ and -iota_- side by side for genus-1 components.
    BoundaryPresentation p;
    p.components = {{1, +1}, {1, -1}};
    p.ambient_rank = static_cast<long>(plus_block.rows());
    p.inclusion = plus_block.hstack(minus_block.negated());
    return p;
}

}  // namespace

TEST_CASE("product kernel is the diagonal") {
    BoundaryPresentation p = InstanceGenerator::product(1);
    LagrangianKernel k = boundary_kernel(p, FieldSpec::rationals());
    REQUIRE(k.dim() == 2);
    CHECK(k.basis[0] == Vec{1, 0, 1, 0});
    CHECK(k.basis[1] == Vec{0, 1, 0, 1});

    LagrangianReport rep = verify_lagrangian(k, p);
    CHECK(rep.isotropic);
    CHECK(rep.half_dimensional);
}

TEST_CASE("solid torus meridian") {
    BoundaryPresentation p;
    p.components = {{1, +1}};
    p.ambient_rank = 1;
    p.inclusion = IntegerMatrix{{0, 1}};
    LagrangianKernel k = boundary_kernel(p, FieldSpec::rationals());
    REQUIRE(k.dim() == 1);
    CHECK(k.basis[0] == Vec{1, 0});
    CHECK(verify_lagrangian(k, p).valid());
}

TEST_CASE("identity inclusion on a torus is flagged") {
    BoundaryPresentation p;
    p.components = {{1, +1}};
    p.ambient_rank = 2;
    p.inclusion = IntegerMatrix::identity(2);
    LagrangianKernel k = boundary_kernel(p, FieldSpec::rationals());
    CHECK(k.dim() == 0);
    LagrangianReport rep = verify_lagrangian(k, p);
    CHECK(rep.isotropic);
    CHECK_FALSE(rep.half_dimensional);
}

TEST_CASE("kernel dimension mismatch is rejected") {
    BoundaryPresentation p = InstanceGenerator::product(1);
    LagrangianKernel k{FieldSpec::rationals(), {Vec{1, 0, 0}}};
    CHECK_THROWS_AS(verify_lagrangian(k, p), InvalidInput);
}

TEST_CASE("projections and verticals for products") {
    BoundaryPresentation p = InstanceGenerator::product(2);
    ProjectionData d = projections_and_verticals(p, FieldSpec::rationals());
    CHECK(span_dim_q(d.im_pr_plus, 4) == 4);  // all of H^+
    CHECK(d.v_plus.empty());
    CHECK(d.v_minus.empty());
    VerticalReport v = verify_verticals(p, FieldSpec::rationals());
    CHECK(v.valid());
    CHECK(upsilon(p) == 0);
}

TEST_CASE("zero inclusions fail the orthogonality diagnostic") {
    BoundaryPresentation p;
    p.components = {{1, +1}, {1, -1}};
    p.ambient_rank = 0;
    p.inclusion = IntegerMatrix(0, 4);
    LagrangianKernel k = boundary_kernel(p, FieldSpec::rationals());
    CHECK(k.dim() == 4);  // everything bounds
    CHECK_FALSE(verify_lagrangian(k, p).half_dimensional);

    VerticalReport v = verify_verticals(p, FieldSpec::rationals());
    CHECK(v.dims_equal);
    CHECK_FALSE(v.orth_plus);  // V^+ = H^+ but (im Pr_+)^perp = 0
    CHECK_FALSE(v.orth_minus);
}

TEST_CASE("nonsingular blocks have trivial verticals") {
    IntegerMatrix diag21{{2, 0}, {0, 1}};
    BoundaryPresentation p = two_torus_blocks(diag21, IntegerMatrix::identity(2));
    ProjectionData d = projections_and_verticals(p, FieldSpec::rationals());
    CHECK(d.v_plus.empty());
    CHECK(d.v_minus.empty());
    CHECK(upsilon(p) == 0);
}

TEST_CASE("upsilon counts compressed handles") {
    CHECK(upsilon(InstanceGenerator::product(2)) == 0);
    CHECK(upsilon(InstanceGenerator::compression(2, 1)) == 1);
    CHECK(upsilon(InstanceGenerator::compression(3, 2)) == 2);
    CHECK(upsilon(InstanceGenerator::product(0)) == 0);  // trivial H_1
}

TEST_CASE("unequal genera shift the vertical dimensions coherently") {
    // Compression-body shape: genus-2 top compressing a1, genus-1 bottom.
    BoundaryPresentation p;
    p.components = {{2, +1}, {1, -1}};
    p.ambient_rank = 3;
    p.inclusion = IntegerMatrix{
        {0, 0, 1, 0, -1, 0},  // A: a2+ and a-
        {0, 0, 0, 1, 0, -1},  // B: b2+ and b-
        {0, 1, 0, 0, 0, 0},   // P: b1+ only
    };
    LagrangianKernel k = boundary_kernel(p, FieldSpec::rationals());
    CHECK(verify_lagrangian(k, p).valid());  // dim 3 = g+ + g-
    VerticalReport v = verify_verticals(p, FieldSpec::rationals());
    CHECK(v.dim_v_plus == 1);
    CHECK(v.dim_v_minus == 0);
    CHECK_FALSE(v.dims_equal);
    CHECK(v.dims_consistent);  // difference equals g+ - g-
    CHECK(v.orth_plus);
    CHECK(v.orth_minus);
}

TEST_CASE("ambient torsion rows only matter at their primes") {
    BoundaryPresentation p;
    p.components = {{1, +1}, {1, -1}};
    p.ambient_rank = 1;
    p.ambient_torsion = {2};
    p.inclusion = IntegerMatrix{
        {0, 1, 0, -1},  // free row: b+ - b-
        {1, 0, -1, 0},  // Z/2 row: a+ - a-
    };
    CHECK(boundary_kernel(p, FieldSpec::rationals()).dim() == 3);
    CHECK(boundary_kernel(p, FieldSpec::mod(3)).dim() == 3);  // Z/2 tensor F_3 = 0
    CHECK(boundary_kernel(p, FieldSpec::mod(2)).dim() == 2);  // torsion row binds
}

TEST_CASE("generator families satisfy the boundary invariants") {
    InstanceGenerator gen(2024);
    std::vector<Int> divisors = {2, 3, 5, 7};
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = gen.random_valid(4, divisors);
        const BoundaryPresentation& p = inst.presentation;

        for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::mod(2), FieldSpec::mod(3),
                                FieldSpec::mod(5), FieldSpec::mod(7)}) {
            LagrangianKernel k = boundary_kernel(p, field);
            LagrangianReport rep = verify_lagrangian(k, p);
            CHECK(rep.isotropic);
            CHECK(rep.half_dimensional);
            CHECK(verify_verticals(p, field).valid());
        }
    }
}

TEST_CASE("rational kernel reduces to the mod-p kernel away from excluded primes") {
    InstanceGenerator gen(99);
    std::vector<Int> divisors = {2, 3, 5};
    for (int trial = 0; trial < 25; ++trial) {
        auto inst = gen.random_valid(3, divisors, /*allow_vertical=*/false);
        const BoundaryPresentation& p = inst.presentation;
        ExcludedPrimeSet ex = excluded_primes(p);
        std::size_t cols = static_cast<std::size_t>(p.total_boundary_rank());

        LagrangianKernel kq = boundary_kernel(p, FieldSpec::rationals());
        for (Int q : {Int(2), Int(3), Int(5), Int(7), Int(11)}) {
            if (ex.contains(q)) continue;
            std::int64_t qq = static_cast<std::int64_t>(q);
            LagrangianKernel kp = boundary_kernel(p, FieldSpec::mod(qq));
            std::vector<std::vector<std::int64_t>> reduced;
            for (const Vec& v : kq.basis) reduced.push_back(reduce_vec(v, qq));
            CHECK(span_dim(reduced, cols, qq) == kp.basis.size());
        }
    }
}

TEST_CASE("symplectic and unimodular generators are exact") {
    InstanceGenerator gen(5);
    for (long g : {1L, 2L, 3L}) {
        IntegerMatrix s = gen.random_symplectic(g, 8);
        CHECK(is_symplectic(s, g));
    }
    for (long n : {2L, 4L, 6L}) {
        IntegerMatrix u = gen.random_unimodular(n, 10);
        // An integer matrix is unimodular exactly when all its invariant
        // factors are 1.
        for (const Int& d : smith_normal_form(u).diagonal) CHECK(d == 1);
    }
}
