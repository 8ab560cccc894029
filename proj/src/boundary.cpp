#include "homcalc/boundary.hpp"

#include <algorithm>

#include "homcalc/modp.hpp"

namespace homcalc {

FieldSpec FieldSpec::mod(std::int64_t prime) {
    if (prime < 2 || !is_prime(Int(prime)))
        throw InvalidInput("field modulus " + std::to_string(prime) + " is not prime");
    return FieldSpec{false, prime};
}

std::string FieldSpec::name() const { return is_rational ? "Q" : "F" + std::to_string(p); }

void BoundaryPresentation::validate() const {
    if (components.empty()) throw InvalidInput("presentation needs at least one component");
    for (const auto& c : components) {
        if (c.genus < 0) throw InvalidInput("negative genus");
        if (c.sign != 1 && c.sign != -1) throw InvalidInput("component sign must be +1 or -1");
    }
    if (ambient_rank < 0) throw InvalidInput("negative ambient rank");
    for (const Int& t : ambient_torsion)
        if (t < 2) throw InvalidInput("torsion coefficients must exceed 1");
    std::size_t want_rows = static_cast<std::size_t>(ambient_rank) + ambient_torsion.size();
    if (inclusion.rows() != want_rows ||
        inclusion.cols() != static_cast<std::size_t>(total_boundary_rank()))
        throw InvalidInput("inclusion matrix shape does not match presentation");
}

long BoundaryPresentation::total_boundary_rank() const {
    long n = 0;
    for (const auto& c : components) n += 2 * c.genus;
    return n;
}

long BoundaryPresentation::genus_sum() const {
    long g = 0;
    for (const auto& c : components) g += c.genus;
    return g;
}

std::size_t BoundaryPresentation::column_offset(std::size_t comp) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < comp; ++i) off += 2 * static_cast<std::size_t>(components[i].genus);
    return off;
}

bool BoundaryPresentation::is_two_component() const {
    return components.size() == 2 && components[0].sign + components[1].sign == 0;
}

std::size_t BoundaryPresentation::component_index(Side s) const {
    if (!is_two_component())
        throw InvalidInput("operation requires exactly two components with opposite signs");
    int want = (s == Side::Plus) ? +1 : -1;
    return components[0].sign == want ? 0 : 1;
}

IntegerMatrix BoundaryPresentation::iota(Side s) const {
    std::size_t comp = component_index(s);
    std::size_t off = column_offset(comp);
    std::size_t width = 2 * static_cast<std::size_t>(components[comp].genus);
    IntegerMatrix block(inclusion.rows(), width);
    int sign = components[comp].sign;
    for (std::size_t i = 0; i < inclusion.rows(); ++i)
        for (std::size_t j = 0; j < width; ++j)
            block.at(i, j) = sign * inclusion.at(i, off + j);
    return block;
}

IntegerMatrix BoundaryPresentation::iota_free(Side s) const {
    return iota(s).submatrix_rows(0, static_cast<std::size_t>(ambient_rank));
}

IntegerMatrix BoundaryPresentation::inclusion_free() const {
    return inclusion.submatrix_rows(0, static_cast<std::size_t>(ambient_rank));
}

Vec BoundaryPresentation::side_slice(Side s, const Vec& boundary_vec) const {
    std::size_t comp = component_index(s);
    std::size_t off = column_offset(comp);
    std::size_t width = 2 * static_cast<std::size_t>(components[comp].genus);
    if (boundary_vec.size() != static_cast<std::size_t>(total_boundary_rank()))
        throw InvalidInput("boundary vector dimension mismatch");
    return Vec(boundary_vec.begin() + static_cast<long>(off),
               boundary_vec.begin() + static_cast<long>(off + width));
}

Int surface_form(long genus, const Vec& u, const Vec& v) {
    if (u.size() != static_cast<std::size_t>(2 * genus) || v.size() != u.size())
        throw InvalidInput("surface form dimension mismatch");
    Int s = 0;
    for (long i = 0; i < genus; ++i) {
        std::size_t a = 2 * static_cast<std::size_t>(i), b = a + 1;
        s += u[a] * v[b] - u[b] * v[a];
    }
    return s;
}

Int BoundaryPresentation::boundary_form(const Vec& u, const Vec& v) const {
    if (u.size() != static_cast<std::size_t>(total_boundary_rank()) || v.size() != u.size())
        throw InvalidInput("boundary form dimension mismatch");
    Int s = 0;
    for (std::size_t c = 0; c < components.size(); ++c) {
        std::size_t off = column_offset(c);
        for (long i = 0; i < components[c].genus; ++i) {
            std::size_t a = off + 2 * static_cast<std::size_t>(i), b = a + 1;
            s += components[c].sign * (u[a] * v[b] - u[b] * v[a]);
        }
    }
    return s;
}

namespace {

// Map matrix over a field: free rows as given; over F_p only the torsion
// coordinates with p | t_j survive, reduced mod p. Over Q just the free rows.
IntegerMatrix field_map_matrix(const IntegerMatrix& full, long free_rows,
                               const std::vector<Int>& torsion, const FieldSpec& field) {
    IntegerMatrix out = full.submatrix_rows(0, static_cast<std::size_t>(free_rows));
    if (field.is_rational) return out;
    for (std::size_t j = 0; j < torsion.size(); ++j) {
        if (torsion[j] % field.p != 0) continue;
        out = out.vstack(full.submatrix_rows(static_cast<std::size_t>(free_rows) + j, 1));
    }
    return out;
}

std::vector<Vec> field_kernel(const IntegerMatrix& m, const FieldSpec& field) {
    if (field.is_rational) return kernel_basis(m);
    std::vector<Vec> out;
    for (const auto& v : ModMatrix(m, field.p).kernel()) {
        Vec w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
        out.push_back(std::move(w));
    }
    return out;
}

// Deterministic independent spanning subset, greedy in input order.
std::vector<Vec> independent_subset(const std::vector<Vec>& vecs, std::size_t cols,
                                    const FieldSpec& field) {
    std::vector<Vec> kept;
    std::size_t rank = 0;
    for (const Vec& v : vecs) {
        std::vector<Vec> trial = kept;
        trial.push_back(v);
        std::size_t r = field.is_rational
                            ? span_dim_q(trial, cols)
                            : span_dim([&] {
                                  std::vector<std::vector<std::int64_t>> red;
                                  for (const Vec& t : trial) red.push_back(reduce_vec(t, field.p));
                                  return red;
                              }(), cols, field.p);
        if (r > rank) {
            kept.push_back(v);
            rank = r;
        }
    }
    return kept;
}

bool field_spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t cols,
                       const FieldSpec& field) {
    if (field.is_rational) return spans_equal_q(a, b, cols);
    std::vector<std::vector<std::int64_t>> ra, rb;
    for (const Vec& v : a) ra.push_back(reduce_vec(v, field.p));
    for (const Vec& v : b) rb.push_back(reduce_vec(v, field.p));
    return spans_equal(ra, rb, cols, field.p);
}

}  // namespace

std::size_t span_dim_q(const std::vector<Vec>& vecs, std::size_t cols) {
    if (vecs.empty()) return 0;
    return rank_rational(IntegerMatrix::from_rows(vecs, cols));
}

bool spans_equal_q(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t cols) {
    std::size_t da = span_dim_q(a, cols);
    std::size_t db = span_dim_q(b, cols);
    if (da != db) return false;
    std::vector<Vec> joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    return span_dim_q(joined, cols) == da;
}

std::vector<Vec> orthogonal_complement(long genus, const std::vector<Vec>& span,
                                       const FieldSpec& field) {
    std::size_t n = 2 * static_cast<std::size_t>(genus);
    // Rows pair a spanning vector against x: omega(v, x) = sum_i v_a x_b - v_b x_a.
    IntegerMatrix pairing(span.size(), n);
    for (std::size_t r = 0; r < span.size(); ++r) {
        const Vec& v = span[r];
        if (v.size() != n) throw InvalidInput("orthogonal complement dimension mismatch");
        for (long i = 0; i < genus; ++i) {
            std::size_t a = 2 * static_cast<std::size_t>(i), b = a + 1;
            pairing.at(r, b) = v[a];
            pairing.at(r, a) = -v[b];
        }
    }
    if (span.empty()) {
        std::vector<Vec> all;
        IntegerMatrix id = IntegerMatrix::identity(n);
        for (std::size_t j = 0; j < n; ++j) all.push_back(id.col(j));
        return all;
    }
    return field_kernel(pairing, field);
}

LagrangianKernel boundary_kernel(const BoundaryPresentation& p, const FieldSpec& field) {
    p.validate();
    IntegerMatrix m = field_map_matrix(p.inclusion, p.ambient_rank, p.ambient_torsion, field);
    return LagrangianKernel{field, field_kernel(m, field)};
}

LagrangianReport verify_lagrangian(const LagrangianKernel& k, const BoundaryPresentation& p) {
    p.validate();
    std::size_t n = static_cast<std::size_t>(p.total_boundary_rank());
    for (const Vec& v : k.basis)
        if (v.size() != n)
            throw InvalidInput("kernel vector dimension does not match presentation");

    LagrangianReport rep;
    rep.kernel_dim = k.dim();
    rep.expected_dim = p.genus_sum();
    rep.half_dimensional = rep.kernel_dim == rep.expected_dim;
    rep.isotropic = true;
    for (std::size_t i = 0; i < k.basis.size() && rep.isotropic; ++i)
        for (std::size_t j = i; j < k.basis.size() && rep.isotropic; ++j) {
            Int w = p.boundary_form(k.basis[i], k.basis[j]);
            if (!k.field.is_rational) w %= k.field.p;
            if (w != 0) rep.isotropic = false;
        }
    return rep;
}

ProjectionData projections_and_verticals(const BoundaryPresentation& p, const FieldSpec& field) {
    if (!p.is_two_component())
        throw InvalidInput("projections need exactly two components of opposite sign");
    LagrangianKernel k = boundary_kernel(p, field);

    ProjectionData out;
    out.field = field;
    std::vector<Vec> plus_slices, minus_slices;
    for (const Vec& v : k.basis) {
        plus_slices.push_back(p.side_slice(Side::Plus, v));
        minus_slices.push_back(p.side_slice(Side::Minus, v));
    }
    std::size_t np = 2 * static_cast<std::size_t>(p.genus(Side::Plus));
    std::size_t nm = 2 * static_cast<std::size_t>(p.genus(Side::Minus));
    out.im_pr_plus = independent_subset(plus_slices, np, field);
    out.im_pr_minus = independent_subset(minus_slices, nm, field);

    out.v_plus = field_kernel(
        field_map_matrix(p.iota(Side::Plus), p.ambient_rank, p.ambient_torsion, field), field);
    out.v_minus = field_kernel(
        field_map_matrix(p.iota(Side::Minus), p.ambient_rank, p.ambient_torsion, field), field);
    return out;
}

VerticalReport verify_verticals(const BoundaryPresentation& p, const FieldSpec& field) {
    ProjectionData d = projections_and_verticals(p, field);
    std::size_t np = 2 * static_cast<std::size_t>(p.genus(Side::Plus));
    std::size_t nm = 2 * static_cast<std::size_t>(p.genus(Side::Minus));

    VerticalReport rep;
    rep.dim_v_plus = static_cast<long>(d.v_plus.size());
    rep.dim_v_minus = static_cast<long>(d.v_minus.size());
    rep.dims_equal = rep.dim_v_plus == rep.dim_v_minus;
    rep.dims_consistent =
        rep.dim_v_plus - rep.dim_v_minus == p.genus(Side::Plus) - p.genus(Side::Minus);
    std::vector<Vec> perp_plus = orthogonal_complement(p.genus(Side::Plus), d.im_pr_plus, field);
    std::vector<Vec> perp_minus = orthogonal_complement(p.genus(Side::Minus), d.im_pr_minus, field);
    rep.orth_plus = field_spans_equal(d.v_plus, perp_plus, np, field);
    rep.orth_minus = field_spans_equal(d.v_minus, perp_minus, nm, field);
    return rep;
}

long upsilon(const BoundaryPresentation& p) {
    IntegerMatrix plus = p.iota_free(Side::Plus);
    return static_cast<long>(plus.cols() - rank_rational(plus));
}

}  // namespace homcalc
