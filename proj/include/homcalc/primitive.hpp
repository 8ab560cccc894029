#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcalc/boundary.hpp"

namespace homcalc {

/// Primes dividing the torsion of coker(iota_+), coker(iota_-),
/// coker(Pr_+) or coker(Pr_-); divisibility by anything outside this
/// set cannot obstruct primitivity.
struct ExcludedPrimeSet {
    std::vector<Int> primes;  // sorted, distinct

    bool contains(const Int& q) const;
};

/// Primitive classes c_+ in H^+ and c_- in H^- with
/// m * iota_+(c_+) == m * iota_-(c_-) in H_1(M).
struct PrimitivePair {
    Vec c_plus;
    Vec c_minus;
    Int multiplier = 1;
};

/// Quotient of the ambient group by its torsion: torsion coordinates
/// and their inclusion rows are dropped; the rational homology is
/// unchanged. Torsion-free input passes through untouched.
BoundaryPresentation normalize_torsion_free(const BoundaryPresentation& p);

/// Requires a torsion-free ambient group (normalize first).
ExcludedPrimeSet excluded_primes(const BoundaryPresentation& p);

/// Image of Pr_{side}^{-1}(q * H^{side}) in K/qK, expressed in
/// coordinates of the saturated integer kernel basis. Dimension
/// exceeding g means the presentation cannot come from a 3-manifold.
struct ApSubspace {
    Int prime;
    Side side;
    std::vector<std::vector<std::int64_t>> basis;  // residue coordinates
    long dim = 0;
    long genus_bound = 0;
};

ApSubspace a_p_subspace(const BoundaryPresentation& p, const Int& q, Side side);

/// Coordinatewise Chinese Remainder lift: x == residues[i] mod primes[i],
/// entries canonical in [0, prod primes).
Vec crt_lift(const std::vector<Int>& primes, const std::vector<Vec>& residues, std::size_t m);

struct ResidueChoice {
    Int prime;
    std::vector<std::int64_t> residue;  // in kernel-basis coordinates
    std::string method;                 // "trivial" | "lex" | "sample" | "structured"
};

struct KernelSearchResult {
    Vec element;       // b in boundary coordinates
    Vec coefficients;  // b expressed in the kernel basis
    std::vector<Vec> kernel_basis;
    std::vector<ResidueChoice> residues;
};

/// Element b of the saturated kernel whose residue mod q avoids
/// A^+_q and A^-_q for every excluded prime q, so neither slice of b
/// is divisible by an excluded prime.
KernelSearchResult find_kernel_element(const BoundaryPresentation& p,
                                       const ExcludedPrimeSet& excluded,
                                       std::uint64_t seed = 0);

/// Divides both slices by their common content. A content mismatch
/// cannot happen for data satisfying the excluded-prime conditions and
/// is reported as an invalid presentation.
PrimitivePair extract_primitive_pair(const Vec& b, const BoundaryPresentation& p,
                                     const ExcludedPrimeSet& excluded);

struct PairSearchOutcome {
    PrimitivePair pair;
    long upsilon_value = 0;
    std::string branch;  // "vertical" (upsilon > 0) or "kernel-search"
    ExcludedPrimeSet excluded;
    std::vector<ResidueChoice> residues;
};

/// Full search: vertical branch when upsilon > 0, otherwise
/// normalize -> excluded primes -> kernel element -> extraction.
/// Requires two boundary components of equal positive genus.
PairSearchOutcome find_primitive_homologous_pair(const BoundaryPresentation& p,
                                                 std::uint64_t seed = 0);

struct PairVerification {
    Int content_plus;
    Int content_minus;
    bool primitive = false;
    bool homologous = false;  // m*(iota_+(c_+) - iota_-(c_-)) == 0 exactly

    bool ok() const { return primitive && homologous; }
};

/// Independent re-check from the raw matrices.
PairVerification verify_primitive_pair(const BoundaryPresentation& p, const PrimitivePair& pair);

}  // namespace homcalc
