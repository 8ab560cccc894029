#include "homcalc/caseio.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace homcalc {

namespace {

void check_keys(const Json& j, const std::string& ctx, const std::set<std::string>& required,
                const std::set<std::string>& optional, bool strict) {
    if (!j.is_object()) throw InvalidInput(ctx + ": expected a JSON object");
    for (const auto& key : required)
        if (!j.contains(key)) throw InvalidInput(ctx + ": missing field '" + key + "'");
    if (!strict) return;
    for (const auto& [key, value] : j.items())
        if (!required.count(key) && !optional.count(key))
            throw InvalidInput(ctx + ": unknown field '" + key + "' (strict mode)");
}

void check_version_and_type(const Json& j, const std::string& want_type) {
    if (!j.is_object()) throw InvalidInput("case file must be a JSON object");
    if (!j.contains("version") || !j["version"].is_string() || j["version"] != "1")
        throw InvalidInput("case file must declare \"version\": \"1\"");
    if (!j.contains("type") || !j["type"].is_string() || j["type"] != want_type)
        throw InvalidInput("case file type must be \"" + want_type + "\"");
}

long json_to_long(const Json& j, const std::string& what) {
    Int v = json_to_int(j, what);
    if (v < -1000000 || v > 1000000) throw InvalidInput(what + " out of range");
    return static_cast<long>(v);
}

std::string status_string(bool ok) { return ok ? "verified" : "violated"; }

Report make_report(const std::string& subcommand) {
    Report r;
    r["version"] = "1";
    r["subcommand"] = subcommand;
    return r;
}

Report basis_to_json(const std::vector<Vec>& basis) {
    Report arr = Report::array();
    for (const Vec& v : basis) arr.push_back(vec_to_json(v));
    return arr;
}

Report group_to_json(const AbelianGroupStructure& g) {
    Report r;
    r["free_rank"] = to_decimal(Int(g.free_rank));
    Report t = Report::array();
    for (const Int& x : g.torsion) t.push_back(to_decimal(x));
    r["torsion"] = t;
    return r;
}

Report index_list(const std::vector<std::size_t>& idx) {
    Report arr = Report::array();
    for (std::size_t i : idx) arr.push_back(to_decimal(Int(i)));
    return arr;
}

Report class_set_to_json(const BasicClassSet& b) { return basis_to_json(b.classes); }

}  // namespace

Int json_to_int(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) return parse_decimal(j.get<std::string>());
    throw InvalidInput(what + ": expected an integer or a decimal string");
}

Vec json_to_vec(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidInput(what + ": expected an array");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(json_to_int(e, what));
    return v;
}

IntegerMatrix json_to_matrix(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidInput(what + ": expected an array of rows");
    std::vector<Vec> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        rows.push_back(json_to_vec(r, what));
        if (rows.size() == 1) cols = rows.back().size();
        else if (rows.back().size() != cols) throw InvalidInput(what + ": ragged rows");
    }
    return IntegerMatrix::from_rows(rows, cols);
}

Report int_to_json(const Int& v) { return Report(to_decimal(v)); }

Report vec_to_json(const Vec& v) {
    Report arr = Report::array();
    for (const Int& x : v) arr.push_back(to_decimal(x));
    return arr;
}

Report matrix_to_json(const IntegerMatrix& m) {
    Report arr = Report::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(vec_to_json(m.row(i)));
    return arr;
}

std::string surface_label(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string name = (i % 2 == 0 ? "a" : "b") + std::to_string(i / 2 + 1);
        Int c = v[i];
        if (out.empty()) {
            if (c == 1) out = name;
            else if (c == -1) out = "-" + name;
            else out = to_decimal(c) + "*" + name;
        } else {
            out += (c > 0) ? " + " : " - ";
            Int a = abs_int(c);
            out += (a == 1) ? name : to_decimal(a) + "*" + name;
        }
    }
    return out.empty() ? "0" : out;
}

Json load_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open case file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

BoundaryPresentation presentation_from_json(const Json& j, bool strict) {
    check_version_and_type(j, "presentation");
    check_keys(j, "presentation", {"version", "type", "components", "ambient_rank", "inclusion"},
               {"ambient_torsion"}, strict);

    BoundaryPresentation p;
    if (!j["components"].is_array() || j["components"].empty())
        throw InvalidInput("presentation: components must be a nonempty array");
    for (const auto& c : j["components"]) {
        check_keys(c, "component", {"genus", "sign"}, {}, strict);
        SurfaceComponent sc;
        sc.genus = json_to_long(c["genus"], "genus");
        sc.sign = static_cast<int>(json_to_long(c["sign"], "sign"));
        p.components.push_back(sc);
    }
    p.ambient_rank = json_to_long(j["ambient_rank"], "ambient_rank");
    if (j.contains("ambient_torsion"))
        p.ambient_torsion = json_to_vec(j["ambient_torsion"], "ambient_torsion");
    p.inclusion = json_to_matrix(j["inclusion"], "inclusion");
    p.validate();
    return p;
}

Report presentation_to_json(const BoundaryPresentation& p) {
    Report r;
    r["version"] = "1";
    r["type"] = "presentation";
    Report comps = Report::array();
    for (const auto& c : p.components) {
        Report cc;
        cc["genus"] = to_decimal(Int(c.genus));
        cc["sign"] = to_decimal(Int(c.sign));
        comps.push_back(cc);
    }
    r["components"] = comps;
    r["ambient_rank"] = to_decimal(Int(p.ambient_rank));
    if (p.has_torsion()) r["ambient_torsion"] = vec_to_json(p.ambient_torsion);
    r["inclusion"] = matrix_to_json(p.inclusion);
    return r;
}

NormOracle norm_from_json(const Json& j, bool strict) {
    check_keys(j, "norm oracle", {"rank", "functionals"}, {}, strict);
    NormOracle n;
    n.rank = json_to_long(j["rank"], "rank");
    if (!j["functionals"].is_array()) throw InvalidInput("functionals must be an array");
    for (const auto& f : j["functionals"]) n.functionals.push_back(json_to_vec(f, "functional"));
    n.validate();
    return n;
}

BasicClassSet classes_from_json(const Json& j, long rank) {
    BasicClassSet b;
    b.rank = rank;
    if (!j.is_array()) throw InvalidInput("classes must be an array");
    for (const auto& c : j) b.classes.push_back(json_to_vec(c, "class"));
    b.validate();
    return b;
}

namespace {

// ---- presentation subcommands ----

Report lagrangian_section(const BoundaryPresentation& p, const FieldSpec& field, bool* all_ok) {
    LagrangianKernel k = boundary_kernel(p, field);
    LagrangianReport rep = verify_lagrangian(k, p);
    Report out;
    out["field"] = field.name();
    out["kernel_dim"] = to_decimal(Int(rep.kernel_dim));
    out["expected_dim"] = to_decimal(Int(rep.expected_dim));
    out["kernel_basis"] = basis_to_json(k.basis);
    out["isotropic"] = rep.isotropic;
    out["half_dimensional"] = rep.half_dimensional;
    out["valid"] = rep.valid();
    if (!rep.valid()) *all_ok = false;
    if (p.is_two_component()) {
        VerticalReport v = verify_verticals(p, field);
        Report vr;
        vr["dim_v_plus"] = to_decimal(Int(v.dim_v_plus));
        vr["dim_v_minus"] = to_decimal(Int(v.dim_v_minus));
        vr["dims_equal"] = v.dims_equal;
        vr["dims_consistent"] = v.dims_consistent;
        vr["orth_plus"] = v.orth_plus;
        vr["orth_minus"] = v.orth_minus;
        vr["valid"] = v.valid();
        out["verticals"] = vr;
        if (!v.valid()) *all_ok = false;
    }
    return out;
}

RunResult run_lagrangian_check(const Json& input, const RunOptions& opts) {
    BoundaryPresentation p = presentation_from_json(input, opts.strict);
    Report r = make_report("lagrangian-check");
    bool ok = true;
    Report result;
    result["rational"] = lagrangian_section(p, FieldSpec::rationals(), &ok);
    if (p.is_two_component()) result["upsilon"] = to_decimal(Int(upsilon(p)));
    if (opts.has_field)
        result["mod_p"] = lagrangian_section(p, FieldSpec::mod(opts.field_p), &ok);
    r["result"] = result;
    r["status"] = status_string(ok);
    return {r, ok ? 0 : 1};
}

RunResult run_find_primitive_pair(const Json& input, const RunOptions& opts) {
    BoundaryPresentation p = presentation_from_json(input, opts.strict);
    PairSearchOutcome outcome = find_primitive_homologous_pair(p, opts.seed);

    BoundaryPresentation check_against =
        outcome.branch == "vertical" ? p : normalize_torsion_free(p);
    PairVerification v = verify_primitive_pair(check_against, outcome.pair);

    Report r = make_report("find-primitive-pair");
    Report result;
    result["upsilon"] = to_decimal(Int(outcome.upsilon_value));
    result["branch"] = outcome.branch;
    result["normalized"] = p.has_torsion() && outcome.branch != "vertical";
    Report primes = Report::array();
    for (const Int& q : outcome.excluded.primes) primes.push_back(to_decimal(q));
    result["excluded_primes"] = primes;
    Report residues = Report::array();
    for (const auto& rc : outcome.residues) {
        Report e;
        e["prime"] = to_decimal(rc.prime);
        e["method"] = rc.method;
        Report res = Report::array();
        for (std::int64_t x : rc.residue) res.push_back(to_decimal(Int(x)));
        e["residue"] = res;
        residues.push_back(e);
    }
    result["residues"] = residues;
    result["c_plus"] = vec_to_json(outcome.pair.c_plus);
    result["c_plus_label"] = surface_label(outcome.pair.c_plus);
    result["c_minus"] = vec_to_json(outcome.pair.c_minus);
    result["c_minus_label"] = surface_label(outcome.pair.c_minus);
    result["multiplier"] = to_decimal(outcome.pair.multiplier);
    r["result"] = result;

    Report ver;
    ver["content_plus"] = to_decimal(v.content_plus);
    ver["content_minus"] = to_decimal(v.content_minus);
    ver["primitive"] = v.primitive;
    ver["homologous"] = v.homologous;
    r["verification"] = ver;
    r["status"] = status_string(v.ok());
    return {r, v.ok() ? 0 : 1};
}

RunResult run_excluded_primes(const Json& input, const RunOptions& opts) {
    BoundaryPresentation p = presentation_from_json(input, opts.strict);
    BoundaryPresentation norm = normalize_torsion_free(p);
    ExcludedPrimeSet ex = excluded_primes(norm);

    Report r = make_report("excluded-primes");
    Report result;
    result["normalized"] = p.has_torsion();
    Report primes = Report::array();
    for (const Int& q : ex.primes) primes.push_back(to_decimal(q));
    result["excluded_primes"] = primes;
    result["coker_iota_plus"] = group_to_json(cokernel(norm.iota_free(Side::Plus)));
    result["coker_iota_minus"] = group_to_json(cokernel(norm.iota_free(Side::Minus)));
    r["result"] = result;
    r["status"] = "verified";
    return {r, 0};
}

RunResult run_crt_lift(const Json& input, const RunOptions& opts) {
    check_version_and_type(input, "crt");
    check_keys(input, "crt", {"version", "type", "primes", "residues"}, {}, opts.strict);
    Vec primes = json_to_vec(input["primes"], "primes");
    if (!input["residues"].is_array()) throw InvalidInput("residues must be an array");
    std::vector<Vec> residues;
    for (const auto& e : input["residues"]) residues.push_back(json_to_vec(e, "residue"));
    if (residues.empty() || residues.size() != primes.size())
        throw InvalidInput("need one residue vector per prime");
    std::size_t m = residues[0].size();
    for (const Vec& v : residues)
        if (v.size() != m) throw InvalidInput("residue vectors must share a dimension");

    Vec x = crt_lift(primes, residues, m);
    Int modulus = 1;
    for (const Int& q : primes) modulus *= q;
    bool ok = true;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t c = 0; c < m; ++c) {
            Int want = residues[i][c] % primes[i];
            if (want < 0) want += primes[i];
            if (x[c] % primes[i] != want) ok = false;
        }

    Report r = make_report("crt-lift");
    Report result;
    result["modulus"] = to_decimal(modulus);
    result["lift"] = vec_to_json(x);
    r["result"] = result;
    Report ver;
    ver["congruences_ok"] = ok;
    r["verification"] = ver;
    r["status"] = status_string(ok);
    return {r, ok ? 0 : 1};
}

// ---- norm-case subcommands ----

struct NormCase {
    NormOracle norm;
    BasicClassSet classes;
    Json raw;
};

NormCase load_norm_case(const Json& input, bool strict) {
    check_version_and_type(input, "norm_case");
    check_keys(input, "norm_case", {"version", "type", "rank", "functionals", "classes"},
               {"h", "h1", "h2", "part", "g_prev", "g_next", "probes", "check_parity"}, strict);
    NormCase nc;
    nc.norm.rank = json_to_long(input["rank"], "rank");
    for (const auto& f : input["functionals"])
        nc.norm.functionals.push_back(json_to_vec(f, "functional"));
    nc.norm.validate();
    nc.classes = classes_from_json(input["classes"], nc.norm.rank);
    nc.raw = input;
    return nc;
}

Vec required_vec(const Json& input, const std::string& key, long rank) {
    if (!input.contains(key)) throw InvalidInput("missing field '" + key + "'");
    Vec v = json_to_vec(input[key], key);
    if (v.size() != static_cast<std::size_t>(rank))
        throw InvalidInput(key + " has wrong dimension");
    return v;
}

RunResult run_bottommost(const Json& input, const RunOptions& opts) {
    NormCase nc = load_norm_case(input, opts.strict);
    Vec h = required_vec(nc.raw, "h", nc.norm.rank);
    Int chi = chi_minus(nc.norm, h);
    BasicClassSet bottom = bottommost(nc.classes, nc.norm, h);

    Report r = make_report("bottommost");
    Report result;
    result["chi_minus"] = to_decimal(chi);
    result["bottom_pairing"] = to_decimal(-chi);
    result["classes"] = class_set_to_json(bottom);
    r["result"] = result;
    r["status"] = "verified";
    return {r, 0};
}

RunResult run_h1h2_check(const Json& input, const RunOptions& opts) {
    NormCase nc = load_norm_case(input, opts.strict);
    long part = nc.raw.contains("part") ? json_to_long(nc.raw["part"], "part") : 1;
    Vec h1 = required_vec(nc.raw, "h1", nc.norm.rank);
    Vec h2 = required_vec(nc.raw, "h2", nc.norm.rank);

    Report r = make_report("h1h2-check");
    Report result;
    result["part"] = to_decimal(Int(part));
    bool ok = true;
    if (part == 1) {
        AdditivityReport rep = check_h1h2_part1(nc.classes, nc.norm, h1, h2);
        result["chi_h1"] = to_decimal(rep.chi_h1);
        result["chi_h2"] = to_decimal(rep.chi_h2);
        result["chi_sum"] = to_decimal(rep.chi_sum);
        result["additive"] = rep.additive;
        result["bottom_sum"] = class_set_to_json(rep.bottom_sum);
        result["bottom_overlap"] = class_set_to_json(rep.bottom_overlap);
        result["sets_equal"] = rep.sets_equal;
        ok = rep.ok();
    } else if (part == 2) {
        StrictReport rep = check_h1h2_part2(nc.classes, nc.norm, h1, h2);
        result["chi_h1"] = to_decimal(rep.chi_h1);
        result["chi_h2"] = to_decimal(rep.chi_h2);
        result["chi_sum"] = to_decimal(rep.chi_sum);
        result["strict"] = rep.strict;
        result["precondition_failed"] = !rep.strict;
        result["triple_intersection"] = class_set_to_json(rep.triple_intersection);
        result["empty"] = rep.empty_ok;
        ok = rep.ok();
    } else if (part == 3) {
        StabilizationReport rep = stabilization_bound(nc.classes, nc.norm, h1, h2);
        result["m0"] = to_decimal(rep.m0);
        result["stable_constant"] = to_decimal(rep.stable_constant);
        result["eventual_argmax"] = index_list(rep.eventual_argmax);
        result["subset_ok_at_m0"] = rep.subset_ok_at_m0;
        // Window re-check: the subset relation at the next few multiples.
        bool window_ok = rep.subset_ok_at_m0;
        for (Int m = rep.m0; m <= rep.m0 + 3; ++m) {
            BasicClassSet probe = bottommost(nc.classes, nc.norm, vec_add(scaled(h1, m), h2));
            BasicClassSet base = bottommost(nc.classes, nc.norm, h1);
            for (const Vec& alpha : probe.classes)
                if (!base.contains(alpha)) window_ok = false;
        }
        result["subset_ok_window"] = window_ok;
        ok = window_ok;
    } else {
        throw InvalidInput("part must be 1, 2 or 3");
    }
    r["result"] = result;
    r["status"] = status_string(ok);
    return {r, ok ? 0 : 1};
}

RunResult run_successor_check(const Json& input, const RunOptions& opts) {
    NormCase nc = load_norm_case(input, opts.strict);
    Vec g_prev = required_vec(nc.raw, "g_prev", nc.norm.rank);
    Vec g_next = required_vec(nc.raw, "g_next", nc.norm.rank);
    bool ok = check_successor_condition(nc.classes, nc.norm, g_prev, g_next);

    Report r = make_report("successor-check");
    Report result;
    result["bottom_prev"] = class_set_to_json(bottommost(nc.classes, nc.norm, g_prev));
    result["bottom_next"] = class_set_to_json(bottommost(nc.classes, nc.norm, g_next));
    result["successor"] = ok;
    r["result"] = result;
    r["status"] = status_string(ok);
    return {r, ok ? 0 : 1};
}

RunResult run_adjunction_check(const Json& input, const RunOptions& opts) {
    NormCase nc = load_norm_case(input, opts.strict);
    std::optional<std::vector<Vec>> probes;
    if (nc.raw.contains("probes")) {
        std::vector<Vec> pr;
        for (const auto& h : nc.raw["probes"]) pr.push_back(json_to_vec(h, "probe"));
        probes = std::move(pr);
    }
    AdjunctionReport rep = validate_adjunction(nc.classes, nc.norm, probes);

    Report r = make_report("adjunction-check");
    Report result;
    result["consistent"] = rep.consistent;
    result["partial"] = rep.partial;
    result["violations"] = index_list(rep.violations);
    bool parity_ok = true;
    if (nc.raw.contains("check_parity") && nc.raw["check_parity"].is_boolean() &&
        nc.raw["check_parity"].get<bool>()) {
        parity_ok = classes_are_even(nc.classes);
        result["even_classes"] = parity_ok;
    }
    r["result"] = result;
    bool ok = rep.consistent && parity_ok;
    r["status"] = status_string(ok);
    return {r, ok ? 0 : 1};
}

// ---- rank-table subcommands ----

struct RankCase {
    SpincRankTable ambient;
    KnotRankTable knot;
    Json raw;
};

std::vector<std::pair<Vec, Int>> table_entries(const Json& j, const std::string& ctx,
                                               bool strict) {
    check_keys(j, ctx, {"classes", "ranks"}, {}, strict);
    if (!j["classes"].is_array() || !j["ranks"].is_array() ||
        j["classes"].size() != j["ranks"].size())
        throw InvalidInput(ctx + ": classes and ranks must be parallel arrays");
    std::vector<std::pair<Vec, Int>> entries;
    for (std::size_t i = 0; i < j["classes"].size(); ++i)
        entries.emplace_back(json_to_vec(j["classes"][i], ctx),
                             json_to_int(j["ranks"][i], ctx));
    return entries;
}

RankCase load_rank_case(const Json& input, bool strict) {
    check_version_and_type(input, "rank_tables");
    check_keys(input, "rank_tables",
               {"version", "type", "ambient", "knot", "pullback", "meridian_pairing"},
               {"pushforward", "norm", "h", "f_class", "chi_f"}, strict);
    RankCase rc;
    rc.knot.pullback = json_to_matrix(input["pullback"], "pullback");
    rc.ambient.rank = static_cast<long>(rc.knot.pullback.rows());
    rc.knot.rel_rank = static_cast<long>(rc.knot.pullback.cols());
    rc.ambient.entries = table_entries(input["ambient"], "ambient", strict);
    rc.knot.entries = table_entries(input["knot"], "knot", strict);
    rc.knot.meridian_pairing = json_to_int(input["meridian_pairing"], "meridian_pairing");
    if (input.contains("pushforward"))
        rc.knot.pushforward = json_to_matrix(input["pushforward"], "pushforward");
    rc.ambient.validate();
    rc.knot.validate();
    rc.raw = input;
    return rc;
}

RunResult run_floer_simple_check(const Json& input, const RunOptions& opts) {
    RankCase rc = load_rank_case(input, opts.strict);
    Report r = make_report("floer-simple-check");
    Report result;
    result["knot_total"] = to_decimal(rc.knot.total());
    result["ambient_total"] = to_decimal(rc.ambient.total());
    bool ok;
    if (rc.raw.contains("norm") || rc.raw.contains("h")) {
        if (!rc.raw.contains("norm") || !rc.raw.contains("h"))
            throw InvalidInput("bottommost mode needs both 'norm' and 'h'");
        NormOracle norm = norm_from_json(rc.raw["norm"], opts.strict);
        if (norm.rank != rc.ambient.rank)
            throw InvalidInput("norm oracle rank must match the ambient H^2 rank");
        Vec h = required_vec(rc.raw, "h", norm.rank);
        Int chi = chi_minus(norm, h);
        ok = is_bottommostly_simple(rc.knot, rc.ambient, norm, h);
        result["mode"] = "bottommost";
        result["chi_minus"] = to_decimal(chi);
        result["threshold"] = to_decimal(-chi);
        result["bottommostly_simple"] = ok;
    } else {
        ok = is_floer_simple(rc.knot, rc.ambient);
        result["mode"] = "total";
        result["floer_simple"] = ok;
    }
    r["result"] = result;
    r["status"] = status_string(ok);
    return {r, ok ? 0 : 1};
}

RunResult run_extreme_class_check(const Json& input, const RunOptions& opts) {
    RankCase rc = load_rank_case(input, opts.strict);
    Vec f_class = required_vec(rc.raw, "f_class", rc.knot.rel_rank);
    if (!rc.raw.contains("chi_f")) throw InvalidInput("missing field 'chi_f'");
    Int chi_f = json_to_int(rc.raw["chi_f"], "chi_f");
    ExtremeClassReport rep = check_extreme_classes(rc.knot, f_class, chi_f);

    Report r = make_report("extreme-class-check");
    Report result;
    result["observed_min"] = to_decimal(rep.observed_min);
    result["expected_min"] = to_decimal(rep.expected_min);
    result["min_ok"] = rep.min_ok;
    result["observed_max"] = to_decimal(rep.observed_max);
    result["expected_max"] = to_decimal(rep.expected_max);
    result["max_ok"] = rep.max_ok;
    result["symmetric_about_meridian"] = extreme_support_symmetric(rc.knot, f_class);
    r["result"] = result;
    r["status"] = status_string(rep.ok());
    return {r, rep.ok() ? 0 : 1};
}

// ---- tower / obstruction / surface subcommands ----

RunResult run_tower(const Json& input, const RunOptions& opts) {
    check_version_and_type(input, "tower");
    check_keys(input, "tower", {"version", "type", "f_coefficients", "depth"},
               {"constant_term"}, opts.strict);
    TowerSpec spec;
    spec.coefficients = json_to_vec(input["f_coefficients"], "f_coefficients");
    if (input.contains("constant_term"))
        spec.constant = json_to_int(input["constant_term"], "constant_term");
    long depth = json_to_long(input["depth"], "depth");
    TowerReport rep = tower_homology(spec, depth);

    Report r = make_report("tower");
    Report result;
    result["degree"] = to_decimal(Int(spec.zero() ? 0 : spec.degree()));
    result["valuation"] = to_decimal(Int(spec.zero() ? 0 : spec.valuation()));
    result["depth"] = to_decimal(Int(rep.depth));
    Report per = Report::array();
    for (std::size_t d = 0; d < rep.per_depth.size(); ++d) {
        Report e;
        e["depth"] = to_decimal(Int(d + 1));
        e["kernel_rank"] = to_decimal(Int(rep.per_depth[d].kernel_rank));
        e["cokernel"] = group_to_json(rep.per_depth[d].cokernel);
        per.push_back(e);
    }
    result["per_depth"] = per;
    result["stable"] = rep.stable;
    result["hfplus_is_Z"] = rep.hfplus_is_z;
    r["result"] = result;
    r["status"] = "verified";
    return {r, 0};
}

RunResult run_bundle_obstruction(const Json& input, const RunOptions& opts) {
    check_version_and_type(input, "obstruction");
    check_keys(input, "obstruction",
               {"version", "type", "chi_g", "n", "chi_plus", "chi_minus", "chi_double"}, {},
               opts.strict);
    ObstructionReport rep = bundle_unknot_obstruction(
        json_to_int(input["chi_g"], "chi_g"), json_to_int(input["n"], "n"),
        json_to_int(input["chi_plus"], "chi_plus"), json_to_int(input["chi_minus"], "chi_minus"),
        json_to_int(input["chi_double"], "chi_double"));

    Report r = make_report("bundle-obstruction");
    Report result;
    result["lhs"] = to_decimal(rep.lhs);
    result["required"] = to_decimal(rep.required);
    result["bound"] = to_decimal(rep.bound);
    result["chain_absurd"] = rep.chain_absurd;
    result["strict_gap"] = rep.strict_gap;
    result["verdict"] =
        rep.verdict == ObstructionVerdict::Contradiction ? "CONTRADICTION" : "CONSISTENT";
    r["result"] = result;
    r["status"] = "verified";
    return {r, 0};
}

SurfaceClass surface_from_json(const Json& j, const std::string& ctx, bool strict) {
    check_keys(j, ctx, {"euler"}, {"homology", "pairings"}, strict);
    SurfaceClass s;
    s.euler = json_to_int(j["euler"], ctx + ".euler");
    if (j.contains("homology")) s.homology = json_to_vec(j["homology"], ctx + ".homology");
    if (j.contains("pairings")) s.pairings = json_to_vec(j["pairings"], ctx + ".pairings");
    return s;
}

RunResult run_annulus_type(const Json& input, const RunOptions& opts) {
    check_version_and_type(input, "surface_case");
    check_keys(input, "surface_case", {"version", "type", "c_minus", "c_plus"},
               {"classes", "s", "g", "m", "rank"}, opts.strict);
    Vec c_minus = json_to_vec(input["c_minus"], "c_minus");
    Vec c_plus = json_to_vec(input["c_plus"], "c_plus");
    AnnulusType t = classify_annulus(c_minus, c_plus);

    Report r = make_report("annulus-type");
    Report result;
    result["type"] = annulus_type_name(t);
    r["result"] = result;
    r["status"] = "verified";
    return {r, 0};
}

RunResult run_lower_sub(const Json& input, const RunOptions& opts) {
    check_version_and_type(input, "surface_case");
    check_keys(input, "surface_case", {"version", "type", "classes", "s", "g", "m"},
               {"rank", "c_minus", "c_plus"}, opts.strict);
    long rank = input.contains("rank") ? json_to_long(input["rank"], "rank") : 0;
    BasicClassSet b = classes_from_json(input["classes"],
                                        rank ? rank : (input["classes"].empty()
                                                           ? 0
                                                           : static_cast<long>(
                                                                 input["classes"][0].size())));
    SurfaceClass s = surface_from_json(input["s"], "s", opts.strict);
    SurfaceClass g = surface_from_json(input["g"], "g", opts.strict);
    Int m = json_to_int(input["m"], "m");
    LowerSubReport rep = verify_lower_sub(b, s, g, m);

    Report r = make_report("lower-sub");
    Report result;
    result["m"] = to_decimal(rep.m);
    result["threshold"] = to_decimal(rep.threshold);
    result["above_threshold"] = rep.m >= rep.threshold;
    result["in_high"] = index_list(rep.in_high);
    result["in_low"] = index_list(rep.in_low);
    result["subset_ok"] = rep.subset_ok;
    r["result"] = result;
    r["status"] = status_string(rep.subset_ok);
    return {r, rep.subset_ok ? 0 : 1};
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
    static const std::vector<std::string> names = {
        "lagrangian-check", "find-primitive-pair", "excluded-primes", "crt-lift",
        "bottommost",       "h1h2-check",          "successor-check", "adjunction-check",
        "floer-simple-check", "extreme-class-check", "tower",         "bundle-obstruction",
        "annulus-type",     "lower-sub"};
    return names;
}

RunResult run_subcommand(const std::string& subcommand, const Json& input,
                         const RunOptions& opts) {
    if (subcommand == "lagrangian-check") return run_lagrangian_check(input, opts);
    if (subcommand == "find-primitive-pair") return run_find_primitive_pair(input, opts);
    if (subcommand == "excluded-primes") return run_excluded_primes(input, opts);
    if (subcommand == "crt-lift") return run_crt_lift(input, opts);
    if (subcommand == "bottommost") return run_bottommost(input, opts);
    if (subcommand == "h1h2-check") return run_h1h2_check(input, opts);
    if (subcommand == "successor-check") return run_successor_check(input, opts);
    if (subcommand == "adjunction-check") return run_adjunction_check(input, opts);
    if (subcommand == "floer-simple-check") return run_floer_simple_check(input, opts);
    if (subcommand == "extreme-class-check") return run_extreme_class_check(input, opts);
    if (subcommand == "tower") return run_tower(input, opts);
    if (subcommand == "bundle-obstruction") return run_bundle_obstruction(input, opts);
    if (subcommand == "annulus-type") return run_annulus_type(input, opts);
    if (subcommand == "lower-sub") return run_lower_sub(input, opts);
    throw InvalidInput("unknown subcommand: " + subcommand);
}

}  // namespace homcalc
