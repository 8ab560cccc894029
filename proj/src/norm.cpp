#include "homcalc/norm.hpp"

#include <algorithm>

#include "homcalc/lp.hpp"
#include "homcalc/matrix.hpp"

namespace homcalc {

namespace {

void check_dim(const Vec& v, long rank, const char* what) {
    if (v.size() != static_cast<std::size_t>(rank))
        throw InvalidInput(std::string(what) + " has wrong dimension");
}

bool same_set(const BasicClassSet& a, const BasicClassSet& b) {
    std::vector<Vec> x = a.classes, y = b.classes;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

// floor(a / b) for b > 0.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace

void NormOracle::validate() const {
    if (rank < 0) throw InvalidInput("norm oracle has negative rank");
    bool has_zero = false;
    for (const Vec& f : functionals) {
        check_dim(f, rank, "norm functional");
        if (is_zero_vec(f)) has_zero = true;
    }
    if (!has_zero) throw InvalidInput("norm oracle must contain the zero functional");
    for (const Vec& f : functionals) {
        Vec neg = scaled(f, Int(-1));
        if (std::find(functionals.begin(), functionals.end(), neg) == functionals.end())
            throw InvalidInput("norm oracle is not symmetric");
    }
}

void BasicClassSet::validate() const {
    if (rank < 0) throw InvalidInput("class set has negative rank");
    for (const Vec& c : classes) check_dim(c, rank, "basic class");
}

bool BasicClassSet::contains(const Vec& alpha) const {
    return std::find(classes.begin(), classes.end(), alpha) != classes.end();
}

Int chi_minus(const NormOracle& norm, const Vec& h) {
    norm.validate();
    check_dim(h, norm.rank, "homology class");
    Int best = 0;  // zero functional is always present
    for (const Vec& f : norm.functionals) best = std::max(best, dot(f, h));
    return best;
}

BasicClassSet bottommost(const BasicClassSet& b, const NormOracle& norm, const Vec& h) {
    b.validate();
    Int bottom = -chi_minus(norm, h);
    BasicClassSet out;
    out.rank = b.rank;
    for (const Vec& alpha : b.classes)
        if (dot(alpha, h) == bottom) out.classes.push_back(alpha);
    return out;
}

AdditivityReport check_h1h2_part1(const BasicClassSet& b, const NormOracle& norm, const Vec& h1,
                                  const Vec& h2) {
    AdditivityReport rep;
    rep.chi_h1 = chi_minus(norm, h1);
    rep.chi_h2 = chi_minus(norm, h2);
    rep.chi_sum = chi_minus(norm, vec_add(h1, h2));
    rep.additive = rep.chi_sum == rep.chi_h1 + rep.chi_h2;

    rep.bottom_sum = bottommost(b, norm, vec_add(h1, h2));
    BasicClassSet b1 = bottommost(b, norm, h1);
    BasicClassSet b2 = bottommost(b, norm, h2);
    rep.bottom_overlap.rank = b.rank;
    for (const Vec& alpha : b1.classes)
        if (b2.contains(alpha)) rep.bottom_overlap.classes.push_back(alpha);
    rep.sets_equal = same_set(rep.bottom_sum, rep.bottom_overlap);
    return rep;
}

StrictReport check_h1h2_part2(const BasicClassSet& b, const NormOracle& norm, const Vec& h1,
                              const Vec& h2) {
    StrictReport rep;
    rep.chi_h1 = chi_minus(norm, h1);
    rep.chi_h2 = chi_minus(norm, h2);
    rep.chi_sum = chi_minus(norm, vec_add(h1, h2));
    rep.strict = rep.chi_sum < rep.chi_h1 + rep.chi_h2;

    BasicClassSet b1 = bottommost(b, norm, h1);
    BasicClassSet b2 = bottommost(b, norm, h2);
    BasicClassSet bs = bottommost(b, norm, vec_add(h1, h2));
    rep.triple_intersection.rank = b.rank;
    for (const Vec& alpha : b1.classes)
        if (b2.contains(alpha) && bs.contains(alpha))
            rep.triple_intersection.classes.push_back(alpha);
    rep.empty_ok = rep.triple_intersection.classes.empty();
    return rep;
}

StabilizationReport stabilization_bound(const BasicClassSet& b, const NormOracle& norm,
                                        const Vec& h1, const Vec& h2) {
    b.validate();
    norm.validate();
    check_dim(h1, norm.rank, "h1");
    check_dim(h2, norm.rank, "h2");

    // Scores are lines m -> m*slope + intercept; the eventual argmax is
    // the lexicographic maximum (slope, intercept).
    std::vector<Int> slope(norm.functionals.size()), intercept(norm.functionals.size());
    for (std::size_t i = 0; i < norm.functionals.size(); ++i) {
        slope[i] = dot(norm.functionals[i], h1);
        intercept[i] = dot(norm.functionals[i], h2);
    }
    Int c1 = slope[0];
    for (const Int& s : slope) c1 = std::max(c1, s);
    bool have = false;
    Int c2 = 0;
    for (std::size_t i = 0; i < slope.size(); ++i)
        if (slope[i] == c1 && (!have || intercept[i] > c2)) {
            c2 = intercept[i];
            have = true;
        }

    StabilizationReport rep;
    rep.stable_constant = c2;
    Int m0 = 1;
    for (std::size_t i = 0; i < slope.size(); ++i) {
        if (slope[i] == c1 && intercept[i] == c2) {
            rep.eventual_argmax.push_back(i);
            continue;
        }
        if (slope[i] == c1) continue;  // strictly smaller intercept, dominated for every m
        // Dominated once m*(c1 - slope) > intercept - c2.
        Int thr = floor_div(intercept[i] - c2, c1 - slope[i]) + 1;
        m0 = std::max(m0, thr);
    }
    // No class outside B(h1) may solve m*(<a,h1>+c1) == -c2-<a,h2> at m >= m0.
    for (const Vec& alpha : b.classes) {
        Int d = dot(alpha, h1) + c1;
        if (d == 0) continue;
        Int num = -c2 - dot(alpha, h2);
        if (num % d != 0) continue;
        Int m_star = num / d;
        if (m_star >= 1) m0 = std::max(m0, Int(m_star + 1));
    }
    rep.m0 = m0;

    Vec probe = vec_add(scaled(h1, m0), h2);
    BasicClassSet bottom_probe = bottommost(b, norm, probe);
    BasicClassSet bottom_h1 = bottommost(b, norm, h1);
    rep.subset_ok_at_m0 = true;
    for (const Vec& alpha : bottom_probe.classes)
        if (!bottom_h1.contains(alpha)) rep.subset_ok_at_m0 = false;
    return rep;
}

bool check_successor_condition(const BasicClassSet& b_next, const NormOracle& norm_next,
                               const Vec& g_prev_class, const Vec& g_next_class) {
    BasicClassSet next = bottommost(b_next, norm_next, g_next_class);
    BasicClassSet prev = bottommost(b_next, norm_next, g_prev_class);
    for (const Vec& alpha : next.classes)
        if (!prev.contains(alpha)) return false;
    return true;
}

AdjunctionReport validate_adjunction(const BasicClassSet& b, const NormOracle& norm,
                                     const std::optional<std::vector<Vec>>& probes) {
    b.validate();
    norm.validate();
    if (b.rank != norm.rank) throw InvalidInput("class set and norm oracle rank mismatch");

    AdjunctionReport rep;
    if (norm.rank <= 6) {
        for (std::size_t i = 0; i < b.classes.size(); ++i)
            if (!in_convex_hull(norm.functionals, b.classes[i])) rep.violations.push_back(i);
    } else {
        if (!probes)
            throw InvalidInput("rank exceeds the exact hull bound (6); supply a probe set");
        rep.partial = true;
        for (std::size_t i = 0; i < b.classes.size(); ++i)
            for (const Vec& h : *probes) {
                Int chi = chi_minus(norm, h);
                Int pairing = dot(b.classes[i], h);
                if (pairing > chi || -pairing > chi) {
                    rep.violations.push_back(i);
                    break;
                }
            }
    }
    rep.consistent = rep.violations.empty();
    return rep;
}

bool classes_are_even(const BasicClassSet& b) {
    for (const Vec& alpha : b.classes)
        for (const Int& x : alpha)
            if (x % 2 != 0) return false;
    return true;
}

}  // namespace homcalc
