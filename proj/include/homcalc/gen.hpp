#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "homcalc/boundary.hpp"

namespace homcalc {

/// Builders for presentations that are known to satisfy the boundary
/// invariants (Lagrangian kernel, matching vertical dimensions), used
/// as the test corpus. Every returned instance has been re-checked by
/// verify_lagrangian over Q.
class InstanceGenerator {
  public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    /// G x I: both inclusions the identity on Z^{2g}.
    static BoundaryPresentation product(long genus);

    /// G x I with the minus boundary marked through a symplectic
    /// monodromy S (mapping-torus complement): iota_- = S.
    static BoundaryPresentation monodromy_product(long genus, const IntegerMatrix& sp);

    /// Per symplectic pair (a_i, b_i): iota_+ = diag(d_i, e_i),
    /// iota_- = diag(e_i, d_i) with gcd(d_i, e_i) = 1. Kernel stays
    /// Lagrangian and the cokernels carry the divisor torsion.
    static BoundaryPresentation paired_divisor(long genus, const std::vector<std::pair<Int, Int>>& divisors);

    /// Both sides compress the a-handles in [0, k): a_i maps to zero
    /// and b_i to a side-private generator; the remaining pairs map
    /// diagonally. upsilon = k.
    static BoundaryPresentation compression(long genus, long compressed);

    /// Block sum of two presentations (genus and ambient ranks add).
    static BoundaryPresentation block_sum(const BoundaryPresentation& a,
                                          const BoundaryPresentation& b);

    /// Extra ambient coordinates never hit by the boundary.
    static BoundaryPresentation pad_ambient(const BoundaryPresentation& p, long extra);

    /// Random symplectic matrix: a product of transvections
    /// x -> x + c*omega(x, v)*v, verified to preserve the form.
    IntegerMatrix random_symplectic(long genus, int steps);

    /// Random product of elementary integer row operations.
    IntegerMatrix random_unimodular(long n, int steps);

    /// Change of basis on one side's surface (right-composition of the
    /// inclusion block with a symplectic matrix).
    static BoundaryPresentation change_surface_basis(const BoundaryPresentation& p, Side side,
                                                     const IntegerMatrix& sp);

    /// Unimodular change of basis on the free part of H_1(M).
    static BoundaryPresentation change_ambient_basis(const BoundaryPresentation& p,
                                                     const IntegerMatrix& u);

    struct Generated {
        BoundaryPresentation presentation;
        std::string family;
        long genus = 0;
        long upsilon_planted = 0;
        std::vector<Int> divisor_primes;  // primes planted in the cokernels
    };

    /// Random valid instance with total genus in [1, max_genus],
    /// drawn from the families above plus random basis changes.
    /// allowed_divisors seeds the paired-divisor family (empty means
    /// torsion-free cokernels only).
    Generated random_valid(long max_genus, const std::vector<Int>& allowed_divisors = {},
                           bool allow_vertical = true);

    std::uint64_t pick(std::uint64_t bound);  // uniform in [0, bound)

  private:
    std::mt19937_64 rng_;
};

/// Matrix of the standard symplectic form on Z^{2g}.
IntegerMatrix symplectic_form(long genus);

bool is_symplectic(const IntegerMatrix& s, long genus);

}  // namespace homcalc
