#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcalc/matrix.hpp"
#include "homcalc/snf.hpp"

namespace homcalc {

/// Closed oriented surface of the given genus with the standard
/// symplectic basis a1,b1,...,ag,bg (omega(ai,bi) = 1).
struct SurfaceComponent {
    long genus = 0;
    int sign = +1;  // +1 for G_+, -1 for -G_-
};

enum class Side { Plus, Minus };

/// Either the rationals or a prime field.
struct FieldSpec {
    bool is_rational = true;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{true, 0}; }
    static FieldSpec mod(std::int64_t prime);
    std::string name() const;
};

/// H_1 of a surface boundary together with the inclusion-induced map
/// into H_1(M). The inclusion matrix stores each component block
/// pre-multiplied by its orientation sign, so for the two-component
/// case the matrix applied to (x_+, x_-) is iota_+(x_+) - iota_-(x_-),
/// and kernel elements directly encode homologous pairs.
///
/// Rows: ambient_rank free coordinates, then one coordinate per
/// ambient_torsion invariant factor (ambient group Z^r + sum Z/t_j).
struct BoundaryPresentation {
    std::vector<SurfaceComponent> components;
    long ambient_rank = 0;
    std::vector<Int> ambient_torsion;  // invariant factors, each > 1
    IntegerMatrix inclusion;

    void validate() const;

    long total_boundary_rank() const;  // sum of 2g_i
    long genus_sum() const;
    std::size_t column_offset(std::size_t comp) const;

    bool has_torsion() const { return !ambient_torsion.empty(); }
    bool is_two_component() const;
    std::size_t component_index(Side s) const;
    long genus(Side s) const { return components[component_index(s)].genus; }

    /// Inclusion block of one side with the orientation sign undone,
    /// i.e. the actual map iota_{+/-}: H_1(G_{+/-}) -> H_1(M).
    IntegerMatrix iota(Side s) const;
    /// Same, restricted to the free rows of H_1(M).
    IntegerMatrix iota_free(Side s) const;
    IntegerMatrix inclusion_free() const;

    /// Slice of a boundary vector belonging to one side's block.
    Vec side_slice(Side s, const Vec& boundary_vec) const;

    /// Intersection form on H_1(boundary): signed direct sum of the
    /// component forms.
    Int boundary_form(const Vec& u, const Vec& v) const;
};

/// Intersection pairing on a single surface in the standard basis.
Int surface_form(long genus, const Vec& u, const Vec& v);

struct LagrangianKernel {
    FieldSpec field;
    std::vector<Vec> basis;  // mod-p entries canonical in [0, p)

    long dim() const { return static_cast<long>(basis.size()); }
};

/// Kernel of the inclusion over the field. Over Q this is the
/// saturated integer kernel; mod p the kernel of the reduced map
/// (torsion coordinates with p | t_j contribute mod-p rows,
/// the others vanish).
LagrangianKernel boundary_kernel(const BoundaryPresentation& p, const FieldSpec& field);

struct LagrangianReport {
    bool isotropic = false;
    bool half_dimensional = false;
    long kernel_dim = 0;
    long expected_dim = 0;

    bool valid() const { return isotropic && half_dimensional; }
};

/// A presentation arising from a 3-manifold must yield (true, true).
LagrangianReport verify_lagrangian(const LagrangianKernel& k, const BoundaryPresentation& p);

struct ProjectionData {
    FieldSpec field;
    std::vector<Vec> im_pr_plus;   // projection of the kernel to H^+
    std::vector<Vec> im_pr_minus;  // projection of the kernel to H^-
    std::vector<Vec> v_plus;       // ker iota_+
    std::vector<Vec> v_minus;      // ker iota_-
};

/// Images of the coordinate projections of the kernel and the vertical
/// subspaces V_{+/-} = ker iota_{+/-}. Two-component presentations only.
ProjectionData projections_and_verticals(const BoundaryPresentation& p, const FieldSpec& field);

struct VerticalReport {
    long dim_v_plus = 0;
    long dim_v_minus = 0;
    bool dims_equal = false;       // dim V^+ == dim V^- (equal-genus form)
    bool dims_consistent = false;  // dim V^+ - dim V^- == g_+ - g_-
    bool orth_plus = false;        // V^+ == (im Pr_+)^perp
    bool orth_minus = false;       // V^- == (im Pr_-)^perp

    bool valid() const { return dims_consistent && orth_plus && orth_minus; }
};

/// Checks the orthogonality relations V^{+/-} = (im Pr_{+/-})^perp and
/// the vertical dimension relation dim V^+ - dim V^- = g_+ - g_-,
/// which for equal genera is the equality dim V^+ = dim V^-.
VerticalReport verify_verticals(const BoundaryPresentation& p, const FieldSpec& field);

/// dim of V^+ over Q.
long upsilon(const BoundaryPresentation& p);

/// Rational span helpers shared with the prime-field ones in modp.hpp.
std::size_t span_dim_q(const std::vector<Vec>& vecs, std::size_t cols);
bool spans_equal_q(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t cols);

/// Subspace of H_1 of one surface orthogonal to all given vectors
/// under the surface intersection form.
std::vector<Vec> orthogonal_complement(long genus, const std::vector<Vec>& span,
                                       const FieldSpec& field);

}  // namespace homcalc
