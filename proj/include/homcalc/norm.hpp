#pragma once

#include <optional>
#include <vector>

#include "homcalc/ints.hpp"

namespace homcalc {

/// Thurston seminorm on H_2 given by its dual vertex set: a finite
/// symmetric set of integer functionals containing 0, with
/// chi_-(h) = max over the set of <phi, h>.
struct NormOracle {
    long rank = 0;
    std::vector<Vec> functionals;

    void validate() const;  // symmetry, 0 present, dimensions
};

/// Finite set of integer cohomology classes (mod torsion), paired with
/// homology by the dot product in the dual basis.
struct BasicClassSet {
    long rank = 0;
    std::vector<Vec> classes;

    void validate() const;
    bool contains(const Vec& alpha) const;
};

Int chi_minus(const NormOracle& norm, const Vec& h);

/// { alpha in B : <alpha, h> == -chi_-(h) }. Equals B when h == 0.
BasicClassSet bottommost(const BasicClassSet& b, const NormOracle& norm, const Vec& h);

struct AdditivityReport {
    Int chi_h1, chi_h2, chi_sum;
    bool additive = false;
    BasicClassSet bottom_sum;       // B(h1 + h2)
    BasicClassSet bottom_overlap;   // B(h1) cap B(h2)
    bool sets_equal = false;

    /// Fails only when the additive hypothesis holds and the sets differ.
    bool ok() const { return !additive || sets_equal; }
};

/// Additive case: whenever chi(h1+h2) = chi(h1) + chi(h2), the
/// bottommost set of the sum must equal the intersection.
AdditivityReport check_h1h2_part1(const BasicClassSet& b, const NormOracle& norm, const Vec& h1,
                                  const Vec& h2);

struct StrictReport {
    Int chi_h1, chi_h2, chi_sum;
    bool strict = false;  // precondition chi(h1+h2) < chi(h1)+chi(h2)
    BasicClassSet triple_intersection;
    bool empty_ok = false;

    bool ok() const { return !strict || empty_ok; }
};

/// Strict case: the triple intersection B(h1) cap B(h2) cap B(h1+h2)
/// must be empty. A failed precondition is reported, not asserted.
StrictReport check_h1h2_part2(const BasicClassSet& b, const NormOracle& norm, const Vec& h1,
                              const Vec& h2);

struct StabilizationReport {
    Int m0;               // B(m h1 + h2) subset of B(h1) for all m >= m0
    Int stable_constant;  // chi(m h1 + h2) == m chi(h1) + this, for m >= m0
    std::vector<std::size_t> eventual_argmax;  // functional indices
    bool subset_ok_at_m0 = false;
};

/// Explicit stabilization bound computed from the finite functional
/// set: past m0 the maximizing functionals of m*h1 + h2 are constant
/// and no class outside B(h1) can reach the bottom of m*h1 + h2.
StabilizationReport stabilization_bound(const BasicClassSet& b, const NormOracle& norm,
                                        const Vec& h1, const Vec& h2);

/// B(g_next) subset of B(g_prev), both computed from the same set.
bool check_successor_condition(const BasicClassSet& b_next, const NormOracle& norm_next,
                               const Vec& g_prev_class, const Vec& g_next_class);

struct AdjunctionReport {
    bool consistent = false;
    bool partial = false;  // decided only on a probe set (rank > 6)
    std::vector<std::size_t> violations;  // indices into the class list
};

/// Every class must lie in the convex hull of the functionals,
/// equivalently |<alpha,h>| <= chi_-(h) for all h. Exact rational LP
/// up to rank 6; beyond that only the supplied probe set is checked.
AdjunctionReport validate_adjunction(const BasicClassSet& b, const NormOracle& norm,
                                     const std::optional<std::vector<Vec>>& probes = std::nullopt);

/// Optional characteristic-vector parity check (off by default in the
/// CLI): first Chern classes of Spin^c structures on a 3-manifold have
/// even pairings, i.e. even coordinates mod torsion.
bool classes_are_even(const BasicClassSet& b);

}  // namespace homcalc
