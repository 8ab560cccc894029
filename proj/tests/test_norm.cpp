#include <doctest.h>

#include <random>

#include "homcalc/lp.hpp"
#include "homcalc/matrix.hpp"
#include "homcalc/norm.hpp"

using namespace homcalc;

namespace {

NormOracle make_norm(long rank, std::vector<Vec> half) {
    NormOracle n;
    n.rank = rank;
    n.functionals.push_back(Vec(rank, Int(0)));
    for (const Vec& f : half) {
        n.functionals.push_back(f);
        n.functionals.push_back(scaled(f, Int(-1)));
    }
    return n;
}

// Four-corner square norm of the fibered genus-2 two-torus model.
NormOracle corner_norm() {
    return make_norm(2, {Vec{2, 2}, Vec{2, -2}});
}

BasicClassSet make_classes(long rank, std::vector<Vec> classes) {
    BasicClassSet b;
    b.rank = rank;
    b.classes = std::move(classes);
    return b;
}

struct RandomInstance {
    NormOracle norm;
    BasicClassSet classes;
};

RandomInstance random_consistent(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> rank_d(1, 3);
    std::uniform_int_distribution<int> entry(-3, 3);
    long rank = rank_d(rng);
    std::vector<Vec> half;
    std::size_t want = 1 + rng() % 3;
    while (half.size() < want) {
        Vec f(rank);
        for (Int& x : f) x = entry(rng);
        if (!is_zero_vec(f)) half.push_back(f);
    }
    RandomInstance inst;
    inst.norm = make_norm(rank, half);
    inst.norm.validate();

    inst.classes.rank = rank;
    int attempts = 0;
    while (inst.classes.classes.size() < 16 && attempts++ < 200) {
        Vec alpha(rank);
        for (Int& x : alpha) x = entry(rng);
        if (in_convex_hull(inst.norm.functionals, alpha) && !inst.classes.contains(alpha))
            inst.classes.classes.push_back(alpha);
    }
    return inst;
}

}  // namespace

TEST_CASE("convex hull membership") {
    std::vector<Vec> tri = {{0, 0}, {4, 0}, {0, 4}};
    CHECK(in_convex_hull(tri, {1, 1}));
    CHECK(in_convex_hull(tri, {4, 0}));
    CHECK(in_convex_hull(tri, {2, 2}));  // on the edge
    CHECK_FALSE(in_convex_hull(tri, {3, 3}));
    CHECK_FALSE(in_convex_hull(tri, {-1, 0}));
}

TEST_CASE("chi_minus evaluates the functional maximum") {
    NormOracle fibered = make_norm(1, {Vec{2}});
    CHECK(chi_minus(fibered, {1}) == 2);  // genus-2 fiber: (2g-2)|h|
    CHECK(chi_minus(fibered, {0}) == 0);
    CHECK(chi_minus(corner_norm(), {1, 1}) == 4);
    CHECK_THROWS_AS(chi_minus(fibered, Vec{1, 2}), InvalidInput);
}

TEST_CASE("bottommost classes") {
    NormOracle fibered = make_norm(1, {Vec{2}});
    BasicClassSet b = make_classes(1, {{-2}, {0}, {2}});
    SUBCASE("fibered model bottoms at 2-2g") {
        BasicClassSet bot = bottommost(b, fibered, {1});
        CHECK(bot.classes == std::vector<Vec>{{-2}});
    }
    SUBCASE("h = 0 keeps everything") {
        CHECK(bottommost(b, fibered, {0}).classes.size() == 3);
    }
    SUBCASE("an extreme class is always caught") {
        // Include the negative of a maximizing functional.
        BasicClassSet witness = make_classes(1, {{-2}});
        CHECK_FALSE(bottommost(witness, fibered, {1}).classes.empty());
    }
}

TEST_CASE("part 1: additive pairings intersect") {
    NormOracle norm = corner_norm();
    BasicClassSet b = make_classes(2, {{-2, -2}, {-2, 2}, {2, -2}, {2, 2}});
    SUBCASE("worked two-dimensional example") {
        AdditivityReport rep = check_h1h2_part1(b, norm, {1, 0}, {0, 1});
        CHECK(rep.additive);
        CHECK(rep.bottom_sum.classes == std::vector<Vec>{{-2, -2}});
        CHECK(rep.bottom_overlap.classes == std::vector<Vec>{{-2, -2}});
        CHECK(rep.ok());
    }
    SUBCASE("h2 = 0 is trivially additive") {
        AdditivityReport rep = check_h1h2_part1(b, norm, {1, 0}, {0, 0});
        CHECK(rep.additive);
        CHECK(rep.ok());
        CHECK(rep.bottom_sum.classes == std::vector<Vec>{{-2, -2}, {-2, 2}});
    }
    SUBCASE("h2 = -h1 is strict, part 1 not binding") {
        AdditivityReport rep = check_h1h2_part1(b, norm, {1, 0}, {-1, 0});
        CHECK_FALSE(rep.additive);
        CHECK(rep.ok());
    }
}

TEST_CASE("part 2: strict subadditivity empties the triple intersection") {
    SUBCASE("h2 = -h1") {
        NormOracle norm = make_norm(1, {Vec{2}});
        BasicClassSet b = make_classes(1, {{-2}, {0}, {2}});
        StrictReport rep = check_h1h2_part2(b, norm, {1}, {-1});
        CHECK(rep.strict);
        CHECK(rep.empty_ok);
    }
    SUBCASE("additive input reports a failed precondition") {
        NormOracle norm = make_norm(1, {Vec{2}});
        BasicClassSet b = make_classes(1, {{-2}});
        StrictReport rep = check_h1h2_part2(b, norm, {1}, {1});
        CHECK_FALSE(rep.strict);
        CHECK(rep.ok());
    }
    SUBCASE("engineered strict instance in rank 2") {
        NormOracle norm = make_norm(2, {Vec{2, 0}, Vec{0, 2}, Vec{2, 2}});
        Vec h1{1, 0}, h2{0, -1};
        REQUIRE(chi_minus(norm, vec_add(h1, h2)) == 2);  // strict: 2 < 2 + 2
        // (-2,0) bottoms h1 and (0,2) bottoms h2; nothing bottoms both.
        BasicClassSet b = make_classes(2, {{-2, 0}, {0, 2}, {0, 0}});
        StrictReport rep = check_h1h2_part2(b, norm, h1, h2);
        CHECK(rep.strict);
        CHECK(rep.empty_ok);
    }
}

TEST_CASE("part 3: stabilization bound") {
    NormOracle norm = corner_norm();
    BasicClassSet b = make_classes(2, {{-2, -2}, {-2, 2}, {2, -2}, {2, 2}});
    SUBCASE("worked example stabilizes immediately") {
        StabilizationReport rep = stabilization_bound(b, norm, {1, 0}, {0, -1});
        CHECK(rep.m0 == 1);
        CHECK(rep.subset_ok_at_m0);
        // B(m h1 + h2) = {(-2,2)} inside B(h1) = {(-2,-2),(-2,2)} for m = 1..10.
        BasicClassSet base = bottommost(b, norm, {1, 0});
        for (int m = 1; m <= 10; ++m) {
            BasicClassSet probe = bottommost(b, norm, {Int(m), Int(-1)});
            CHECK(probe.classes == std::vector<Vec>{{-2, 2}});
            for (const Vec& alpha : probe.classes) CHECK(base.contains(alpha));
        }
    }
    SUBCASE("h2 = 0") {
        StabilizationReport rep = stabilization_bound(b, norm, {1, 0}, {0, 0});
        CHECK(rep.m0 == 1);
        CHECK(rep.subset_ok_at_m0);
    }
    SUBCASE("h1 = 0") {
        StabilizationReport rep = stabilization_bound(b, norm, {0, 0}, {0, 1});
        CHECK(rep.m0 == 1);
        CHECK(rep.subset_ok_at_m0);
    }
}

TEST_CASE("successor condition") {
    NormOracle norm = make_norm(1, {Vec{2}});
    BasicClassSet b = make_classes(1, {{-2}, {2}});
    SUBCASE("reflexive") { CHECK(check_successor_condition(b, norm, {1}, {1})); }
    SUBCASE("engineered failure") {
        CHECK_FALSE(check_successor_condition(b, norm, {1}, {-1}));
    }
    SUBCASE("additive pair") {
        NormOracle n2 = corner_norm();
        BasicClassSet b2 = make_classes(2, {{-2, -2}, {-2, 2}});
        // g_next = g_prev + s with additivity along the way.
        CHECK(check_successor_condition(b2, n2, {1, 0}, {2, 0}));
    }
}

TEST_CASE("adjunction validation") {
    NormOracle norm = corner_norm();
    SUBCASE("vertices pass") {
        BasicClassSet b = make_classes(2, {{-2, -2}});
        CHECK(validate_adjunction(b, norm).consistent);
    }
    SUBCASE("doubled vertex fails") {
        BasicClassSet b = make_classes(2, {{4, 4}});
        AdjunctionReport rep = validate_adjunction(b, norm);
        CHECK_FALSE(rep.consistent);
        CHECK(rep.violations == std::vector<std::size_t>{0});
    }
    SUBCASE("midpoints pass") {
        BasicClassSet b = make_classes(2, {{2, 0}, {0, 0}});
        CHECK(validate_adjunction(b, norm).consistent);
    }
    SUBCASE("high rank needs probes") {
        NormOracle big = make_norm(7, {Vec{2, 0, 0, 0, 0, 0, 0}});
        BasicClassSet b = make_classes(7, {{1, 0, 0, 0, 0, 0, 0}});
        CHECK_THROWS_AS(validate_adjunction(b, big), InvalidInput);
        std::vector<Vec> probes = {Vec{1, 0, 0, 0, 0, 0, 0}};
        AdjunctionReport rep = validate_adjunction(b, big, probes);
        CHECK(rep.partial);
        CHECK(rep.consistent);
    }
}

TEST_CASE("hull membership agrees with the pairing bound") {
    // Dual route: every LP-accepted class satisfies |<a,h>| <= chi(h) on
    // random probes.
    std::mt19937_64 rng(177);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        RandomInstance inst = random_consistent(rng);
        for (int probe = 0; probe < 50; ++probe) {
            Vec h(inst.norm.rank);
            for (Int& x : h) x = entry(rng);
            Int chi = chi_minus(inst.norm, h);
            for (const Vec& alpha : inst.classes.classes) {
                Int pairing = dot(alpha, h);
                CHECK(pairing <= chi);
                CHECK(-pairing <= chi);
            }
        }
    }
}

TEST_CASE("seminorm laws hold by construction") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> scale(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        RandomInstance inst = random_consistent(rng);
        long rank = inst.norm.rank;
        Vec h(rank), k(rank);
        for (Int& x : h) x = entry(rng);
        for (Int& x : k) x = entry(rng);
        CHECK(chi_minus(inst.norm, vec_add(h, k)) <=
              chi_minus(inst.norm, h) + chi_minus(inst.norm, k));
        Int n(scale(rng));
        CHECK(chi_minus(inst.norm, scaled(h, n)) == abs_int(n) * chi_minus(inst.norm, h));
    }
}

TEST_CASE("lemma parts on randomized adjunction-consistent instances") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> entry(-4, 4);
    int additive_seen = 0, strict_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        RandomInstance inst = random_consistent(rng);
        long rank = inst.norm.rank;
        Vec h1(rank), h2(rank);
        for (Int& x : h1) x = entry(rng);
        if (rng() % 2 == 0) {
            h2 = scaled(h1, Int(rng() % 3));  // forced-additive half
        } else {
            for (Int& x : h2) x = entry(rng);
        }

        AdditivityReport p1 = check_h1h2_part1(inst.classes, inst.norm, h1, h2);
        CHECK(p1.ok());
        if (p1.additive) ++additive_seen;
        StrictReport p2 = check_h1h2_part2(inst.classes, inst.norm, h1, h2);
        CHECK(p2.ok());
        if (p2.strict) ++strict_seen;

        StabilizationReport p3 = stabilization_bound(inst.classes, inst.norm, h1, h2);
        CHECK(p3.subset_ok_at_m0);
        BasicClassSet base = bottommost(inst.classes, inst.norm, h1);
        Int chi1 = chi_minus(inst.norm, h1);
        for (Int m = p3.m0; m <= 3 * p3.m0; ++m) {
            Vec probe = vec_add(scaled(h1, m), h2);
            for (const Vec& alpha : bottommost(inst.classes, inst.norm, probe).classes)
                CHECK(base.contains(alpha));
            CHECK(chi_minus(inst.norm, probe) - m * chi1 == p3.stable_constant);
        }
    }
    CHECK(additive_seen > 10);
    CHECK(strict_seen > 10);
}
