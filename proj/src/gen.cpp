#include "homcalc/gen.hpp"

#include <algorithm>
#include <set>

namespace homcalc {

IntegerMatrix symplectic_form(long genus) {
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    IntegerMatrix j(n, n);
    for (long i = 0; i < genus; ++i) {
        std::size_t a = 2 * static_cast<std::size_t>(i), b = a + 1;
        j.at(a, b) = 1;
        j.at(b, a) = -1;
    }
    return j;
}

bool is_symplectic(const IntegerMatrix& s, long genus) {
    IntegerMatrix j = symplectic_form(genus);
    return s.transpose().mul(j).mul(s) == j;
}

BoundaryPresentation InstanceGenerator::product(long genus) {
    BoundaryPresentation p;
    p.components = {{genus, +1}, {genus, -1}};
    p.ambient_rank = 2 * genus;
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    IntegerMatrix inc(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        inc.at(i, i) = 1;
        inc.at(i, n + i) = -1;  // minus block stores -iota_-
    }
    p.inclusion = inc;
    return p;
}

BoundaryPresentation InstanceGenerator::monodromy_product(long genus, const IntegerMatrix& sp) {
    if (!is_symplectic(sp, genus)) throw InvalidInput("monodromy matrix is not symplectic");
    BoundaryPresentation p = product(genus);
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.inclusion.at(i, n + j) = -sp.at(i, j);
    return p;
}

BoundaryPresentation InstanceGenerator::paired_divisor(
    long genus, const std::vector<std::pair<Int, Int>>& divisors) {
    if (divisors.size() != static_cast<std::size_t>(genus))
        throw InvalidInput("one divisor pair per genus handle required");
    for (const auto& [d, e] : divisors)
        if (d < 1 || e < 1 || gcd_int(d, e) != 1)
            throw InvalidInput("divisor pairs must be positive and coprime");

    BoundaryPresentation p;
    p.components = {{genus, +1}, {genus, -1}};
    p.ambient_rank = 2 * genus;
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    IntegerMatrix inc(n, 2 * n);
    for (long i = 0; i < genus; ++i) {
        std::size_t a = 2 * static_cast<std::size_t>(i), b = a + 1;
        inc.at(a, a) = divisors[static_cast<std::size_t>(i)].first;
        inc.at(b, b) = divisors[static_cast<std::size_t>(i)].second;
        inc.at(a, n + a) = -divisors[static_cast<std::size_t>(i)].second;
        inc.at(b, n + b) = -divisors[static_cast<std::size_t>(i)].first;
    }
    p.inclusion = inc;
    return p;
}

BoundaryPresentation InstanceGenerator::compression(long genus, long compressed) {
    if (compressed < 1 || compressed > genus)
        throw InvalidInput("compressed handle count must lie in [1, genus]");
    BoundaryPresentation p;
    p.components = {{genus, +1}, {genus, -1}};
    // Ambient: diagonal part for the uncompressed pairs, then one private
    // b-image per compressed handle and side.
    p.ambient_rank = 2 * (genus - compressed) + 2 * compressed;
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    IntegerMatrix inc(static_cast<std::size_t>(p.ambient_rank), 2 * n);

    std::size_t row = 0;
    for (long i = compressed; i < genus; ++i) {
        std::size_t a = 2 * static_cast<std::size_t>(i), b = a + 1;
        inc.at(row, a) = 1;
        inc.at(row, n + a) = -1;
        inc.at(row + 1, b) = 1;
        inc.at(row + 1, n + b) = -1;
        row += 2;
    }
    for (long i = 0; i < compressed; ++i) {
        std::size_t b = 2 * static_cast<std::size_t>(i) + 1;
        inc.at(row, b) = 1;           // b_i on the plus side
        inc.at(row + 1, n + b) = -1;  // b_i on the minus side
        row += 2;
    }
    p.inclusion = inc;
    return p;
}

BoundaryPresentation InstanceGenerator::block_sum(const BoundaryPresentation& a,
                                                  const BoundaryPresentation& b) {
    if (!a.is_two_component() || !b.is_two_component())
        throw InvalidInput("block sum needs two-component presentations");
    BoundaryPresentation out;
    long ga = a.genus(Side::Plus) + b.genus(Side::Plus);
    long gm = a.genus(Side::Minus) + b.genus(Side::Minus);
    out.components = {{ga, +1}, {gm, -1}};
    out.ambient_rank = a.ambient_rank + b.ambient_rank;
    if (a.has_torsion() || b.has_torsion()) throw InvalidInput("block sum expects torsion-free");

    std::size_t rows = static_cast<std::size_t>(out.ambient_rank);
    std::size_t cols = static_cast<std::size_t>(out.total_boundary_rank());
    IntegerMatrix inc(rows, cols);

    auto copy_block = [&](const BoundaryPresentation& src, std::size_t row_off, Side side,
                          std::size_t col_off) {
        std::size_t src_off = src.column_offset(src.component_index(side));
        std::size_t width = 2 * static_cast<std::size_t>(src.genus(side));
        for (std::size_t i = 0; i < src.inclusion.rows(); ++i)
            for (std::size_t j = 0; j < width; ++j)
                inc.at(row_off + i, col_off + j) = src.inclusion.at(i, src_off + j);
    };
    std::size_t plus_a = 0;
    std::size_t plus_b = 2 * static_cast<std::size_t>(a.genus(Side::Plus));
    std::size_t minus_a = 2 * static_cast<std::size_t>(ga);
    std::size_t minus_b = minus_a + 2 * static_cast<std::size_t>(a.genus(Side::Minus));
    copy_block(a, 0, Side::Plus, plus_a);
    copy_block(b, static_cast<std::size_t>(a.ambient_rank), Side::Plus, plus_b);
    copy_block(a, 0, Side::Minus, minus_a);
    copy_block(b, static_cast<std::size_t>(a.ambient_rank), Side::Minus, minus_b);
    out.inclusion = inc;
    return out;
}

BoundaryPresentation InstanceGenerator::pad_ambient(const BoundaryPresentation& p, long extra) {
    BoundaryPresentation out = p;
    out.ambient_rank += extra;
    IntegerMatrix zeros(static_cast<std::size_t>(extra), p.inclusion.cols());
    IntegerMatrix free_part = p.inclusion_free().vstack(zeros);
    if (p.has_torsion()) {
        IntegerMatrix torsion_part =
            p.inclusion.submatrix_rows(static_cast<std::size_t>(p.ambient_rank),
                                       p.ambient_torsion.size());
        out.inclusion = free_part.vstack(torsion_part);
    } else {
        out.inclusion = free_part;
    }
    return out;
}

IntegerMatrix InstanceGenerator::random_symplectic(long genus, int steps) {
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    IntegerMatrix s = IntegerMatrix::identity(n);
    IntegerMatrix j = symplectic_form(genus);
    std::uniform_int_distribution<int> entry(-1, 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int step = 0; step < steps; ++step) {
        Vec v(n);
        bool nonzero = false;
        for (auto& x : v) {
            x = entry(rng_);
            if (x != 0) nonzero = true;
        }
        int c = coef(rng_);
        if (!nonzero || c == 0) continue;
        // Transvection T(x) = x + c*omega(x, v)*v, as a matrix I + c*v*(v^T J).
        Vec jv(n, Int(0));
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t k = 0; k < n; ++k) jv[col] += v[k] * j.at(k, col);
        IntegerMatrix t = IntegerMatrix::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t col = 0; col < n; ++col) t.at(r, col) += c * v[r] * jv[col];
        s = t.mul(s);
    }
    if (!is_symplectic(s, genus)) throw std::logic_error("transvection product not symplectic");
    return s;
}

IntegerMatrix InstanceGenerator::random_unimodular(long n, int steps) {
    std::size_t m = static_cast<std::size_t>(n);
    IntegerMatrix u = IntegerMatrix::identity(m);
    if (m < 2) return u;
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int step = 0; step < steps; ++step) {
        std::size_t i = pick(m), j = pick(m);
        if (i == j) continue;
        switch (pick(3)) {
            case 0: u.add_row_multiple(i, j, Int(coef(rng_))); break;
            case 1: u.swap_rows(i, j); break;
            default: u.negate_row(i); break;
        }
    }
    return u;
}

BoundaryPresentation InstanceGenerator::change_surface_basis(const BoundaryPresentation& p,
                                                             Side side, const IntegerMatrix& sp) {
    std::size_t comp = p.component_index(side);
    long g = p.components[comp].genus;
    if (!is_symplectic(sp, g)) throw InvalidInput("surface basis change must be symplectic");
    std::size_t off = p.column_offset(comp);
    std::size_t width = 2 * static_cast<std::size_t>(g);

    BoundaryPresentation out = p;
    for (std::size_t i = 0; i < p.inclusion.rows(); ++i)
        for (std::size_t jj = 0; jj < width; ++jj) {
            Int acc = 0;
            for (std::size_t k = 0; k < width; ++k)
                acc += p.inclusion.at(i, off + k) * sp.at(k, jj);
            out.inclusion.at(i, off + jj) = acc;
        }
    return out;
}

BoundaryPresentation InstanceGenerator::change_ambient_basis(const BoundaryPresentation& p,
                                                             const IntegerMatrix& u) {
    if (u.rows() != static_cast<std::size_t>(p.ambient_rank) || u.rows() != u.cols())
        throw InvalidInput("ambient basis change has wrong shape");
    BoundaryPresentation out = p;
    IntegerMatrix changed = u.mul(p.inclusion_free());
    if (p.has_torsion()) {
        out.inclusion = changed.vstack(p.inclusion.submatrix_rows(
            static_cast<std::size_t>(p.ambient_rank), p.ambient_torsion.size()));
    } else {
        out.inclusion = changed;
    }
    return out;
}

std::uint64_t InstanceGenerator::pick(std::uint64_t bound) {
    std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
    return d(rng_);
}

InstanceGenerator::Generated InstanceGenerator::random_valid(long max_genus,
                                                             const std::vector<Int>& allowed_divisors,
                                                             bool allow_vertical) {
    Generated g;
    long genus = 1 + static_cast<long>(pick(static_cast<std::uint64_t>(max_genus)));
    std::vector<std::uint64_t> families = {0, 1};
    if (allow_vertical) families.push_back(2);
    if (!allowed_divisors.empty()) families.push_back(3);
    std::uint64_t family = families[pick(families.size())];

    switch (family) {
        case 0: {
            g.presentation = product(genus);
            g.family = "product";
            break;
        }
        case 1: {
            g.presentation = monodromy_product(genus, random_symplectic(genus, 6));
            g.family = "monodromy-product";
            break;
        }
        case 2: {
            long k = 1 + static_cast<long>(pick(static_cast<std::uint64_t>(genus)));
            g.presentation = compression(genus, k);
            g.family = "compression";
            g.upsilon_planted = k;
            break;
        }
        default: {
            std::vector<std::pair<Int, Int>> divisors;
            std::set<Int> primes;
            for (long i = 0; i < genus; ++i) {
                Int d = 1, e = 1;
                if (pick(2) == 0) {
                    d = allowed_divisors[pick(allowed_divisors.size())];
                    for (const Int& q : prime_divisors(d)) primes.insert(q);
                }
                if (pick(3) == 0) {
                    for (int tries = 0; tries < 8; ++tries) {
                        Int cand = allowed_divisors[pick(allowed_divisors.size())];
                        if (gcd_int(d, cand) == 1) {
                            e = cand;
                            break;
                        }
                    }
                    for (const Int& q : prime_divisors(e)) primes.insert(q);
                }
                divisors.emplace_back(d, e);
            }
            g.presentation = paired_divisor(genus, divisors);
            g.family = "paired-divisor";
            g.divisor_primes.assign(primes.begin(), primes.end());
            break;
        }
    }
    g.genus = genus;

    // Occasionally glue on a second block, then scramble both surface
    // bases and the ambient basis.
    if (genus < max_genus && pick(4) == 0) {
        BoundaryPresentation second = product(1 + static_cast<long>(pick(
                                                      static_cast<std::uint64_t>(max_genus - genus))));
        g.presentation = block_sum(g.presentation, second);
        g.family += "+block";
        g.genus = g.presentation.genus(Side::Plus);
    }
    if (pick(3) == 0) {
        g.presentation = pad_ambient(g.presentation, 1 + static_cast<long>(pick(2)));
        g.family += "+pad";
    }
    g.presentation = change_surface_basis(g.presentation, Side::Plus,
                                          random_symplectic(g.presentation.genus(Side::Plus), 5));
    g.presentation = change_surface_basis(g.presentation, Side::Minus,
                                          random_symplectic(g.presentation.genus(Side::Minus), 5));
    g.presentation = change_ambient_basis(
        g.presentation, random_unimodular(g.presentation.ambient_rank, 8));

    LagrangianKernel k = boundary_kernel(g.presentation, FieldSpec::rationals());
    LagrangianReport rep = verify_lagrangian(k, g.presentation);
    if (!rep.valid()) throw std::logic_error("generator produced an invalid presentation");
    return g;
}

}  // namespace homcalc
