#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcalc/matrix.hpp"
#include "homcalc/norm.hpp"
#include "homcalc/snf.hpp"

namespace homcalc {

/// Ranks of the ambient Floer groups per Spin^c structure, keyed by
/// the first Chern class vector. Absent classes have rank zero.
struct SpincRankTable {
    long rank = 0;  // H^2 coordinate count
    std::vector<std::pair<Vec, Int>> entries;

    void validate() const;
    Int total() const;
    Int rank_of(const Vec& cls) const;
};

/// Knot Floer ranks over relative Spin^c structures, with the pullback
/// j^* to absolute classes, an optional pushforward j_* on H_2, and
/// the declared meridian pairing |[dF].[mu]| of the rational Seifert
/// class.
struct KnotRankTable {
    long rel_rank = 0;
    std::vector<std::pair<Vec, Int>> entries;
    IntegerMatrix pullback;                     // ambient_rank x rel_rank
    std::optional<IntegerMatrix> pushforward;   // rel_rank x ambient_rank
    Int meridian_pairing = 0;

    void validate() const;
    Int total() const;
    Vec pull_back(const Vec& relative_class) const;
    /// Sum of knot ranks over relative classes pulling back to cls.
    Int pulled_rank_of(const Vec& cls) const;
};

BasicClassSet basic_classes_from_ranks(const SpincRankTable& t);

/// The knot rank over each ambient class dominates the ambient rank;
/// violations mean the tables cannot be a genuine pairing.
void validate_paired_tables(const KnotRankTable& k, const SpincRankTable& t);

/// Total ranks agree.
bool is_floer_simple(const KnotRankTable& k, const SpincRankTable& t);

/// Rank equality restricted to ambient classes pairing with h at or
/// below -chi_-(h). With h = 0 this is exactly is_floer_simple.
bool is_bottommostly_simple(const KnotRankTable& k, const SpincRankTable& t,
                            const NormOracle& norm, const Vec& h);

struct ExtremeClassReport {
    Int observed_min, observed_max;
    Int expected_min, expected_max;
    bool min_ok = false;
    bool max_ok = false;

    bool ok() const { return min_ok && max_ok; }
};

/// Extremal pairings of the knot support against a rational
/// Seifert-like class: min = -chi_-(F), max = chi_-(F) + 2|[dF].[mu]|.
ExtremeClassReport check_extreme_classes(const KnotRankTable& k, const Vec& f_class,
                                         const Int& chi_f);

/// Optional validator: the support pairings form a multiset symmetric
/// about the meridian pairing (the knot Floer symmetry behind the
/// min/max asymmetry). Informational, not an invariant.
bool extreme_support_symmetric(const KnotRankTable& k, const Vec& f_class);

/// Thurston norm of h agrees between the ambient manifold and the
/// knot complement.
bool check_norm_restriction(const NormOracle& norm_y, const NormOracle& norm_x, const Vec& h);

/// f(U) = c_1 U + c_2 U^2 + ... ; the constant term must vanish.
struct TowerSpec {
    Int constant = 0;
    std::vector<Int> coefficients;  // c_1, c_2, ...

    long degree() const;     // largest index with nonzero coefficient (>= 1)
    long valuation() const;  // smallest such index
    bool zero() const;
};

struct TowerDepthReport {
    long kernel_rank = 0;
    AbelianGroupStructure cokernel;

    bool operator==(const TowerDepthReport&) const = default;
};

struct TowerReport {
    long depth = 0;
    std::vector<TowerDepthReport> per_depth;  // depths 1..depth
    bool stable = false;      // last deg(f)+1 reports identical
    bool hfplus_is_z = false; // stable and kernel (+) cokernel == Z
};

/// Finite model of the positive U-towers over x and y with the
/// differential x-tower -> y-tower given by multiplication by f(U)
/// followed by the bottom truncation. At each depth d the y-tower has
/// d rungs and the x-tower every rung whose image stays in range;
/// kernel and cokernel are computed exactly over Z. Growth of the
/// per-depth structures is the diagnostic for a non-unit U-coefficient.
TowerReport tower_homology(const TowerSpec& f, long depth);

enum class ObstructionVerdict { Contradiction, Consistent };

struct ObstructionReport {
    Int lhs;       // -chi_plus - chi_minus - 2, the two-class evaluation
    Int required;  // -2n chi_-(G), forced by the fiber class
    Int bound;     // -chi_-(2nG) - 2, the subadditivity ceiling
    bool chain_absurd = false;  // required > bound
    bool strict_gap = false;    // chi_plus + chi_minus > chi_double
    ObstructionVerdict verdict = ObstructionVerdict::Consistent;
};

/// Evaluates the pairing chain for a genus-g fiber with declared norm
/// values of n[G]+[F], n[G]-[F] and 2n[G]. CONTRADICTION (the knot
/// must be trivial) exactly when the chain is absurd and the norm
/// strictly sees the Seifert class.
ObstructionReport bundle_unknot_obstruction(const Int& chi_g, const Int& n, const Int& chi_plus,
                                            const Int& chi_minus, const Int& chi_double);

}  // namespace homcalc
