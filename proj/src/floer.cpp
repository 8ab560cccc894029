#include "homcalc/floer.hpp"

#include <algorithm>
#include <set>

namespace homcalc {

namespace {

void check_entries(const std::vector<std::pair<Vec, Int>>& entries, long rank, const char* what) {
    std::set<Vec> seen;
    for (const auto& [cls, rk] : entries) {
        if (cls.size() != static_cast<std::size_t>(rank))
            throw InvalidInput(std::string(what) + ": class dimension mismatch");
        if (rk < 1) throw InvalidInput(std::string(what) + ": ranks must be positive");
        if (!seen.insert(cls).second)
            throw InvalidInput(std::string(what) + ": duplicate class");
    }
}

}  // namespace

void SpincRankTable::validate() const { check_entries(entries, rank, "ambient table"); }

Int SpincRankTable::total() const {
    Int s = 0;
    for (const auto& e : entries) s += e.second;
    return s;
}

Int SpincRankTable::rank_of(const Vec& cls) const {
    for (const auto& e : entries)
        if (e.first == cls) return e.second;
    return 0;
}

void KnotRankTable::validate() const {
    check_entries(entries, rel_rank, "knot table");
    if (pullback.cols() != static_cast<std::size_t>(rel_rank))
        throw InvalidInput("pullback matrix column count must match relative rank");
    if (pushforward && (pushforward->rows() != static_cast<std::size_t>(rel_rank) ||
                        pushforward->cols() != pullback.rows()))
        throw InvalidInput("pushforward matrix shape mismatch");
    if (meridian_pairing < 0) throw InvalidInput("meridian pairing must be nonnegative");
}

Int KnotRankTable::total() const {
    Int s = 0;
    for (const auto& e : entries) s += e.second;
    return s;
}

Vec KnotRankTable::pull_back(const Vec& relative_class) const {
    return pullback.mul_vec(relative_class);
}

Int KnotRankTable::pulled_rank_of(const Vec& cls) const {
    Int s = 0;
    for (const auto& e : entries)
        if (pull_back(e.first) == cls) s += e.second;
    return s;
}

BasicClassSet basic_classes_from_ranks(const SpincRankTable& t) {
    t.validate();
    BasicClassSet out;
    out.rank = t.rank;
    for (const auto& e : t.entries) out.classes.push_back(e.first);
    return out;
}

void validate_paired_tables(const KnotRankTable& k, const SpincRankTable& t) {
    k.validate();
    t.validate();
    if (k.pullback.rows() != static_cast<std::size_t>(t.rank))
        throw InvalidInput("pullback target dimension must match ambient rank");
    for (const auto& e : t.entries) {
        Int knot = k.pulled_rank_of(e.first);
        if (knot < e.second)
            throw InvalidInput("rank inequality violated: knot rank " + to_decimal(knot) +
                               " < ambient rank " + to_decimal(e.second) + " at a Spin^c class");
    }
}

bool is_floer_simple(const KnotRankTable& k, const SpincRankTable& t) {
    validate_paired_tables(k, t);
    return k.total() == t.total();
}

bool is_bottommostly_simple(const KnotRankTable& k, const SpincRankTable& t,
                            const NormOracle& norm, const Vec& h) {
    validate_paired_tables(k, t);
    Int threshold = -chi_minus(norm, h);

    std::set<Vec> classes;
    for (const auto& e : t.entries) classes.insert(e.first);
    for (const auto& e : k.entries) classes.insert(k.pull_back(e.first));
    for (const Vec& cls : classes) {
        if (dot(cls, h) > threshold) continue;
        if (k.pulled_rank_of(cls) != t.rank_of(cls)) return false;
    }
    return true;
}

ExtremeClassReport check_extreme_classes(const KnotRankTable& k, const Vec& f_class,
                                         const Int& chi_f) {
    k.validate();
    if (k.entries.empty()) throw InvalidInput("knot table has empty support");
    if (chi_f < 0) throw InvalidInput("chi_- value must be nonnegative");

    ExtremeClassReport rep;
    bool first = true;
    for (const auto& e : k.entries) {
        Int pairing = dot(e.first, f_class);
        if (first || pairing < rep.observed_min) rep.observed_min = pairing;
        if (first || pairing > rep.observed_max) rep.observed_max = pairing;
        first = false;
    }
    rep.expected_min = -chi_f;
    rep.expected_max = chi_f + 2 * k.meridian_pairing;
    rep.min_ok = rep.observed_min == rep.expected_min;
    rep.max_ok = rep.observed_max == rep.expected_max;
    return rep;
}

bool extreme_support_symmetric(const KnotRankTable& k, const Vec& f_class) {
    std::vector<Int> pairings;
    for (const auto& e : k.entries)
        for (Int i = 0; i < e.second; ++i) pairings.push_back(dot(e.first, f_class));
    std::sort(pairings.begin(), pairings.end());
    Int center2 = 2 * k.meridian_pairing;  // symmetry v -> 2*mp - v
    for (std::size_t i = 0, j = pairings.size(); i < j--; ++i)
        if (pairings[i] + pairings[j] != center2) return false;
    return true;
}

bool check_norm_restriction(const NormOracle& norm_y, const NormOracle& norm_x, const Vec& h) {
    if (norm_y.rank != norm_x.rank)
        throw InvalidInput("norm oracles live on different H_2 ranks");
    return chi_minus(norm_y, h) == chi_minus(norm_x, h);
}

long TowerSpec::degree() const {
    for (std::size_t i = coefficients.size(); i > 0; --i)
        if (coefficients[i - 1] != 0) return static_cast<long>(i);
    return 0;
}

long TowerSpec::valuation() const {
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        if (coefficients[i] != 0) return static_cast<long>(i + 1);
    return 0;
}

bool TowerSpec::zero() const { return degree() == 0; }

TowerReport tower_homology(const TowerSpec& f, long depth) {
    if (f.constant != 0)
        throw InvalidInput("tower differential must have f(0) = 0 (no constant term)");
    if (depth < 1) throw InvalidInput("tower depth must be at least 1");

    const long deg = f.zero() ? 1 : f.degree();
    const long val = f.zero() ? 1 : f.valuation();

    TowerReport rep;
    rep.depth = depth;
    for (long d = 1; d <= depth; ++d) {
        // y-tower rungs 0..d-1; x-tower rungs 0..d-1+val, exactly those whose
        // truncated image lies inside the y range. Entry (r, c) is the
        // coefficient of y_r in f(U) * x_c, i.e. c_{c-r}.
        std::size_t rows = static_cast<std::size_t>(d);
        std::size_t cols = static_cast<std::size_t>(d + val);
        IntegerMatrix diff(rows, cols);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r) {
                long j = static_cast<long>(c) - static_cast<long>(r);
                if (j >= 1 && j <= static_cast<long>(f.coefficients.size()))
                    diff.at(r, c) = f.coefficients[static_cast<std::size_t>(j - 1)];
            }
        SmithDecomposition snf = smith_normal_form(diff);
        TowerDepthReport dr;
        dr.kernel_rank = static_cast<long>(cols - snf.rank());
        dr.cokernel.free_rank = static_cast<long>(rows - snf.rank());
        for (const Int& dgl : snf.diagonal)
            if (dgl > 1) dr.cokernel.torsion.push_back(dgl);
        rep.per_depth.push_back(std::move(dr));
    }

    const long window = deg + 1;
    rep.stable = depth >= window;
    for (long d = depth - window + 1; rep.stable && d < depth; ++d)
        if (!(rep.per_depth[static_cast<std::size_t>(d)] ==
              rep.per_depth[static_cast<std::size_t>(d - 1)]))
            rep.stable = false;

    const TowerDepthReport& last = rep.per_depth.back();
    rep.hfplus_is_z = rep.stable && last.cokernel.torsion.empty() &&
                      last.kernel_rank + last.cokernel.free_rank == 1;
    return rep;
}

ObstructionReport bundle_unknot_obstruction(const Int& chi_g, const Int& n, const Int& chi_plus,
                                            const Int& chi_minus, const Int& chi_double) {
    if (chi_g < 2 || chi_g % 2 != 0)
        throw InvalidInput("fiber complexity 2g-2 must be a positive even integer");
    if (chi_plus < 0 || chi_minus < 0 || chi_double < 0)
        throw InvalidInput("norm values must be nonnegative");

    ObstructionReport rep;
    rep.lhs = -chi_plus - chi_minus - 2;
    rep.required = -2 * n * chi_g;
    rep.bound = -chi_double - 2;
    rep.chain_absurd = rep.required > rep.bound;
    rep.strict_gap = chi_plus + chi_minus > chi_double;
    rep.verdict = (rep.chain_absurd && rep.strict_gap) ? ObstructionVerdict::Contradiction
                                                       : ObstructionVerdict::Consistent;
    return rep;
}

}  // namespace homcalc
