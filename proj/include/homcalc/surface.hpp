#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcalc/norm.hpp"

namespace homcalc {

/// Product annulus type by the separating status of its boundary
/// curves; a separating simple closed curve is null-homologous, so at
/// this layer "separating" means the zero class.
enum class AnnulusType { NN, NS, SN, SS };

std::string annulus_type_name(AnnulusType t);

/// First argument is the class of the boundary curve on R_-, second on R_+.
AnnulusType classify_annulus(const Vec& c_minus, const Vec& c_plus);

/// Homological shadow of an embedded surface: its class, its declared
/// Euler characteristic, and optionally its pairings against a fixed
/// basic-class set (used when no homology vector is available).
struct SurfaceClass {
    Vec homology;  // may be empty when only pairing data is given
    Int euler = 0;
    std::optional<std::vector<Int>> pairings;  // aligned with a BasicClassSet

    Int euler_neg() const { return euler < 0 ? Int(-euler) : Int(0); }
    Int pairing_against(const BasicClassSet& b, std::size_t index) const;
};

/// Class and Euler arithmetic of the surface built from s and m copies
/// of g by cut-and-pastes: [s] + m[g], chi(s) + m*chi(g); pairings
/// combine linearly.
SurfaceClass cut_paste_class(const SurfaceClass& s, const SurfaceClass& g, const Int& m);

/// m0 = 1 + max over the class set of |<alpha,[S]> - chi(S)|; beyond
/// it the cut-and-paste classes can only lower the pairing condition.
Int lower_sub_threshold(const BasicClassSet& b, const SurfaceClass& s);

struct LowerSubReport {
    Int m;
    Int threshold;
    std::vector<std::size_t> in_high;  // indices with <a,G^(m)> <= chi(G^(m))
    std::vector<std::size_t> in_low;   // indices with <a,G> <= chi(G)
    bool subset_ok = false;
};

/// { a in B : <a, [G^(m)]> <= chi(G^(m)) } is contained in
/// { a in B : <a, [G]> <= chi(G) }, checked by enumeration.
LowerSubReport verify_lower_sub(const BasicClassSet& b, const SurfaceClass& s,
                                const SurfaceClass& g, const Int& m);

}  // namespace homcalc
