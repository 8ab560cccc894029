#include "homcalc/primitive.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "homcalc/modp.hpp"

namespace homcalc {

namespace {

constexpr std::size_t kLexCap = 20000;
constexpr std::size_t kSampleCap = 2000;

std::vector<Vec> saturated_kernel(const BoundaryPresentation& p) {
    return kernel_basis(p.inclusion_free());
}

// Columns are the side slices of the kernel basis, reduced mod q.
ModMatrix side_condition_matrix(const BoundaryPresentation& p, const std::vector<Vec>& kernel,
                                Side side, const Int& q) {
    std::size_t width = 2 * static_cast<std::size_t>(p.genus(side));
    IntegerMatrix cols(width, kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j) {
        Vec slice = p.side_slice(side, kernel[j]);
        for (std::size_t i = 0; i < width; ++i) cols.at(i, j) = slice[i];
    }
    return ModMatrix(cols, q);
}

bool nonzero_image(const ModMatrix& m, const std::vector<std::int64_t>& r) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc = (acc + (__int128)m.at(i, j) * r[j]) % m.p();
        if (acc != 0) return true;
    }
    return false;
}

bool outside_union(const ModMatrix& cp, const ModMatrix& cm, const std::vector<std::int64_t>& r) {
    return nonzero_image(cp, r) && nonzero_image(cm, r);
}

// First vector (in column order) with a nonzero image; exists whenever the
// condition matrix is nonzero mod q.
std::vector<std::int64_t> vector_outside(const ModMatrix& m, std::size_t dim) {
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<std::int64_t> e(dim, 0);
        e[j] = 1;
        if (nonzero_image(m, e)) return e;
    }
    return {};
}

}  // namespace

bool ExcludedPrimeSet::contains(const Int& q) const {
    return std::binary_search(primes.begin(), primes.end(), q);
}

BoundaryPresentation normalize_torsion_free(const BoundaryPresentation& p) {
    p.validate();
    if (!p.has_torsion()) return p;
    BoundaryPresentation out = p;
    out.ambient_torsion.clear();
    out.inclusion = p.inclusion.submatrix_rows(0, static_cast<std::size_t>(p.ambient_rank));
    return out;
}

ExcludedPrimeSet excluded_primes(const BoundaryPresentation& p) {
    p.validate();
    if (p.has_torsion())
        throw InvalidInput("excluded_primes expects a torsion-free ambient group; normalize first");
    if (!p.is_two_component())
        throw InvalidInput("excluded_primes needs exactly two components of opposite sign");

    std::set<Int> acc;
    auto absorb = [&acc](const AbelianGroupStructure& g) {
        for (const Int& t : g.torsion)
            for (const Int& q : prime_divisors(t)) acc.insert(q);
    };
    absorb(cokernel(p.iota_free(Side::Plus)));
    absorb(cokernel(p.iota_free(Side::Minus)));

    std::vector<Vec> kernel = saturated_kernel(p);
    for (Side s : {Side::Plus, Side::Minus}) {
        std::size_t width = 2 * static_cast<std::size_t>(p.genus(s));
        IntegerMatrix proj(width, kernel.size());
        for (std::size_t j = 0; j < kernel.size(); ++j) {
            Vec slice = p.side_slice(s, kernel[j]);
            for (std::size_t i = 0; i < width; ++i) proj.at(i, j) = slice[i];
        }
        absorb(cokernel(proj));
    }

    ExcludedPrimeSet out;
    out.primes.assign(acc.begin(), acc.end());
    return out;
}

ApSubspace a_p_subspace(const BoundaryPresentation& p, const Int& q, Side side) {
    if (!is_prime(q)) throw InvalidInput("a_p_subspace: " + to_decimal(q) + " is not prime");
    if (upsilon(p) != 0) throw InvalidInput("a_p_subspace requires upsilon = 0");
    BoundaryPresentation norm = normalize_torsion_free(p);

    std::vector<Vec> kernel = saturated_kernel(norm);
    ModMatrix cond = side_condition_matrix(norm, kernel, side, q);

    ApSubspace out;
    out.prime = q;
    out.side = side;
    out.basis = cond.kernel();
    out.dim = static_cast<long>(out.basis.size());
    out.genus_bound = norm.genus(side);
    if (out.dim > out.genus_bound)
        throw InvalidPresentation("A_p subspace at p=" + to_decimal(q) + " has dimension " +
                                  std::to_string(out.dim) + " > genus " +
                                  std::to_string(out.genus_bound) +
                                  "; presentation not realizable");
    return out;
}

Vec crt_lift(const std::vector<Int>& primes, const std::vector<Vec>& residues, std::size_t m) {
    if (primes.size() != residues.size())
        throw InvalidInput("crt_lift: prime and residue counts differ");
    if (primes.empty()) throw InvalidInput("crt_lift: empty prime list");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            throw InvalidInput("crt_lift: " + to_decimal(primes[i]) + " is not prime");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) throw InvalidInput("crt_lift: duplicate prime");
        if (residues[i].size() != m) throw InvalidInput("crt_lift: residue dimension mismatch");
    }

    Int big_p = 1;
    for (const Int& q : primes) big_p *= q;

    Vec x(m, Int(0));
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const Int& q = primes[i];
        Int other = big_p / q;
        // other * inv(other mod q) == 1 mod q and 0 mod every other prime.
        Int inv = boost::multiprecision::powm(other % q, q - 2, q);
        Int e = other * inv;
        for (std::size_t c = 0; c < m; ++c) {
            Int r = residues[i][c] % q;
            if (r < 0) r += q;
            x[c] = (x[c] + r * e) % big_p;
        }
    }
    for (Int& v : x)
        if (v < 0) v += big_p;
    return x;
}

KernelSearchResult find_kernel_element(const BoundaryPresentation& p,
                                       const ExcludedPrimeSet& excluded, std::uint64_t seed) {
    if (p.has_torsion())
        throw InvalidInput("find_kernel_element expects a torsion-free ambient group");
    if (upsilon(p) != 0) throw InvalidInput("find_kernel_element requires upsilon = 0");

    KernelSearchResult res;
    res.kernel_basis = saturated_kernel(p);
    const std::size_t dim = res.kernel_basis.size();
    if (dim == 0) throw InvalidPresentation("inclusion has trivial kernel");

    if (excluded.primes.empty()) {
        res.element = res.kernel_basis[0];
        res.coefficients.assign(dim, Int(0));
        res.coefficients[0] = 1;
        res.residues.push_back(ResidueChoice{Int(0), {}, "trivial"});
        return res;
    }

    std::vector<Vec> residue_vecs;
    for (const Int& q : excluded.primes) {
        ModMatrix cp = side_condition_matrix(p, res.kernel_basis, Side::Plus, q);
        ModMatrix cm = side_condition_matrix(p, res.kernel_basis, Side::Minus, q);
        std::int64_t qq = static_cast<std::int64_t>(q);

        std::vector<std::int64_t> found;
        std::string method;

        // Lexicographic sweep of K/qK, capped.
        {
            std::vector<std::int64_t> r(dim, 0);
            for (std::size_t step = 0; step < kLexCap; ++step) {
                std::size_t pos = dim;
                while (pos > 0) {
                    --pos;
                    if (++r[pos] < qq) break;
                    r[pos] = 0;
                    if (pos == 0) { pos = dim; break; }
                }
                if (pos == dim) break;  // wrapped around
                if (outside_union(cp, cm, r)) {
                    found = r;
                    method = "lex";
                    break;
                }
            }
        }
        if (found.empty()) {
            std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(qq)));
            std::uniform_int_distribution<std::int64_t> dist(0, qq - 1);
            for (std::size_t t = 0; t < kSampleCap; ++t) {
                std::vector<std::int64_t> r(dim);
                for (auto& v : r) v = dist(rng);
                if (outside_union(cp, cm, r)) {
                    found = r;
                    method = "sample";
                    break;
                }
            }
        }
        if (found.empty()) {
            // u misses A^+, w misses A^-; one of u, w, u+w misses both.
            auto u = vector_outside(cp, dim);
            auto w = vector_outside(cm, dim);
            if (u.empty() || w.empty())
                throw InvalidPresentation("(K/" + to_decimal(q) +
                                          "K) \\ (A+ u A-) is empty; presentation not realizable");
            if (nonzero_image(cm, u))
                found = u;
            else if (nonzero_image(cp, w))
                found = w;
            else {
                found.resize(dim);
                for (std::size_t i = 0; i < dim; ++i) found[i] = (u[i] + w[i]) % qq;
            }
            if (!outside_union(cp, cm, found))
                throw InvalidPresentation("structured residue search failed; presentation invalid");
            method = "structured";
        }

        res.residues.push_back(ResidueChoice{q, found, method});
        Vec rv(dim);
        for (std::size_t i = 0; i < dim; ++i) rv[i] = found[i];
        residue_vecs.push_back(std::move(rv));
    }

    res.coefficients = crt_lift(excluded.primes, residue_vecs, dim);
    res.element.assign(p.total_boundary_rank(), Int(0));
    for (std::size_t i = 0; i < dim; ++i)
        if (res.coefficients[i] != 0)
            res.element = vec_add(res.element, scaled(res.kernel_basis[i], res.coefficients[i]));

    for (const Int& q : excluded.primes) {
        Vec bp = p.side_slice(Side::Plus, res.element);
        Vec bm = p.side_slice(Side::Minus, res.element);
        if (content(bp) % q == 0 || content(bm) % q == 0)
            throw InvalidPresentation("kernel element divisible by excluded prime " +
                                      to_decimal(q) + "; presentation not realizable");
    }
    return res;
}

PrimitivePair extract_primitive_pair(const Vec& b, const BoundaryPresentation& p,
                                     const ExcludedPrimeSet& excluded) {
    Vec bp = p.side_slice(Side::Plus, b);
    Vec bm = p.side_slice(Side::Minus, b);
    Int kp = content(bp), km = content(bm);
    if (kp == 0 || km == 0) throw InvalidInput("kernel element has a zero slice");
    for (const Int& q : excluded.primes)
        if (kp % q == 0 || km % q == 0)
            throw InvalidInput("slice divisible by excluded prime " + to_decimal(q));
    if (kp != km)
        throw InvalidPresentation("slice contents differ (" + to_decimal(kp) + " vs " +
                                  to_decimal(km) + "); presentation not realizable");
    PrimitivePair pair;
    pair.c_plus = bp;
    pair.c_minus = bm;
    for (Int& v : pair.c_plus) v /= kp;
    for (Int& v : pair.c_minus) v /= km;
    pair.multiplier = 1;
    return pair;
}

namespace {

// Order of the image of c in the torsion part of the ambient group.
Int torsion_annihilator(const BoundaryPresentation& p, Side side, const Vec& c) {
    if (!p.has_torsion()) return 1;
    Vec image = p.iota(side).mul_vec(c);
    Int m = 1;
    for (std::size_t j = 0; j < p.ambient_torsion.size(); ++j) {
        const Int& t = p.ambient_torsion[j];
        Int v = image[static_cast<std::size_t>(p.ambient_rank) + j] % t;
        if (v < 0) v += t;
        m = lcm_int(m, t / gcd_int(t, v));
    }
    return m;
}

}  // namespace

PairSearchOutcome find_primitive_homologous_pair(const BoundaryPresentation& p,
                                                 std::uint64_t seed) {
    p.validate();
    if (!p.is_two_component())
        throw InvalidInput("pair search needs exactly two components of opposite sign");
    if (p.genus(Side::Plus) != p.genus(Side::Minus))
        throw InvalidInput("pair search needs boundary components of equal genus");
    if (p.genus(Side::Plus) == 0) throw InvalidInput("pair search needs positive genus");

    PairSearchOutcome out;
    out.upsilon_value = upsilon(p);

    if (out.upsilon_value > 0) {
        out.branch = "vertical";
        std::vector<Vec> vp = kernel_basis(p.iota_free(Side::Plus));
        std::vector<Vec> vm = kernel_basis(p.iota_free(Side::Minus));
        if (vp.empty() || vm.empty())
            throw InvalidPresentation("upsilon > 0 but a vertical subspace is trivial");
        out.pair.c_plus = vp[0];
        out.pair.c_minus = vm[0];
        out.pair.multiplier = lcm_int(torsion_annihilator(p, Side::Plus, out.pair.c_plus),
                                      torsion_annihilator(p, Side::Minus, out.pair.c_minus));
        return out;
    }

    out.branch = "kernel-search";
    BoundaryPresentation norm = normalize_torsion_free(p);
    out.excluded = excluded_primes(norm);
    KernelSearchResult ks = find_kernel_element(norm, out.excluded, seed);
    out.residues = ks.residues;
    out.pair = extract_primitive_pair(ks.element, norm, out.excluded);
    return out;
}

PairVerification verify_primitive_pair(const BoundaryPresentation& p, const PrimitivePair& pair) {
    PairVerification v;
    v.content_plus = content(pair.c_plus);
    v.content_minus = content(pair.c_minus);
    v.primitive = v.content_plus == 1 && v.content_minus == 1;

    Vec lhs = p.iota(Side::Plus).mul_vec(pair.c_plus);
    Vec rhs = p.iota(Side::Minus).mul_vec(pair.c_minus);
    Vec diff = scaled(vec_sub(lhs, rhs), pair.multiplier);
    v.homologous = true;
    for (long i = 0; i < p.ambient_rank; ++i)
        if (diff[static_cast<std::size_t>(i)] != 0) v.homologous = false;
    for (std::size_t j = 0; j < p.ambient_torsion.size(); ++j)
        if (diff[static_cast<std::size_t>(p.ambient_rank) + j] % p.ambient_torsion[j] != 0)
            v.homologous = false;
    return v;
}

}  // namespace homcalc
