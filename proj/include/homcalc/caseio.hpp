#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "homcalc/boundary.hpp"
#include "homcalc/floer.hpp"
#include "homcalc/norm.hpp"
#include "homcalc/primitive.hpp"
#include "homcalc/surface.hpp"

namespace homcalc {

using Json = nlohmann::json;
using Report = nlohmann::ordered_json;

struct RunOptions {
    bool strict = false;        // reject unknown JSON fields
    bool has_field = false;     // --field given
    std::int64_t field_p = 0;   // prime modulus when has_field
    std::uint64_t seed = 0;     // deterministic sampler seed
};

struct RunResult {
    Report report;
    int exit_code = 0;  // 0 verified/consistent, 1 property violated, 2 invalid input
};

/// Parse a case file; malformed JSON raises InvalidInput with the
/// parser's position diagnostics.
Json load_case_file(const std::string& path);

/// Dispatch one subcommand on a parsed case file. Unknown subcommand
/// or a case of the wrong type raises InvalidInput.
RunResult run_subcommand(const std::string& subcommand, const Json& input, const RunOptions& opts);

/// Names accepted by run_subcommand.
const std::vector<std::string>& subcommand_names();

// Conversions shared with the tests: integers appear in reports as
// decimal strings; inputs accept both JSON integers and strings.
Int json_to_int(const Json& j, const std::string& what);
Vec json_to_vec(const Json& j, const std::string& what);
IntegerMatrix json_to_matrix(const Json& j, const std::string& what);
Report int_to_json(const Int& v);
Report vec_to_json(const Vec& v);
Report matrix_to_json(const IntegerMatrix& m);

BoundaryPresentation presentation_from_json(const Json& j, bool strict);
Report presentation_to_json(const BoundaryPresentation& p);
NormOracle norm_from_json(const Json& j, bool strict);
BasicClassSet classes_from_json(const Json& j, long rank);

/// Human-readable rendering in the a1,b1,...,ag,bg surface basis.
std::string surface_label(const Vec& v);

}  // namespace homcalc
