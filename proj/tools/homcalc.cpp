#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "homcalc/caseio.hpp"

namespace {

using homcalc::Json;
using homcalc::Report;
using homcalc::RunOptions;

int emit_error(const std::string& subcommand, const std::string& message) {
    Report r;
    r["version"] = "1";
    r["subcommand"] = subcommand;
    r["status"] = "invalid-input";
    r["error"] = message;
    std::cout << r.dump(2) << "\n";
    return 2;
}

int run_one(const std::string& subcommand, const Json& input, const RunOptions& opts) {
    try {
        homcalc::RunResult res = homcalc::run_subcommand(subcommand, input, opts);
        std::cout << res.report.dump(2) << "\n";
        return res.exit_code;
    } catch (const homcalc::InvalidInput& e) {
        return emit_error(subcommand, e.what());
    } catch (const Json::exception& e) {
        return emit_error(subcommand, e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homological calculus for surface boundaries, norm oracles and "
                 "Floer rank tables"};
    app.require_subcommand(1);

    struct SubState {
        std::vector<std::string> files;
        bool strict = false;
        std::int64_t field = 0;
        std::uint64_t seed = 0;
        std::string f_coeffs;  // tower flag form
        long depth = 0;
    };
    std::vector<std::pair<CLI::App*, std::shared_ptr<SubState>>> subs;

    for (const std::string& name : homcalc::subcommand_names()) {
        auto state = std::make_shared<SubState>();
        CLI::App* sub = app.add_subcommand(name, "");
        sub->add_option("files", state->files, "case file(s)");
        sub->add_flag("--strict", state->strict, "reject unknown JSON fields");
        sub->add_option("--field", state->field, "prime field modulus for mod-p checks");
        sub->add_option("--seed", state->seed, "seed for the deterministic sampler");
        if (name == "tower") {
            sub->add_option("--f", state->f_coeffs,
                            "comma-separated coefficients of U^1, U^2, ...");
            sub->add_option("--depth", state->depth, "truncation depth");
        }
        subs.emplace_back(sub, state);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are invalid input
    }

    for (auto& [sub, state] : subs) {
        if (!sub->parsed()) continue;
        const std::string name = sub->get_name();

        RunOptions opts;
        opts.strict = state->strict;
        opts.has_field = state->field != 0;
        opts.field_p = state->field;
        opts.seed = state->seed;

        std::vector<Json> inputs;
        if (name == "tower" && state->files.empty()) {
            if (state->depth <= 0)
                return emit_error(name, "flag form needs --f and a positive --depth");
            Json j;
            j["version"] = "1";
            j["type"] = "tower";
            Json coeffs = Json::array();
            std::string cur;
            std::stringstream ss(state->f_coeffs);
            while (std::getline(ss, cur, ',')) coeffs.push_back(cur.empty() ? "0" : cur);
            j["f_coefficients"] = coeffs;
            j["depth"] = state->depth;
            inputs.push_back(j);
        } else {
            if (state->files.empty()) return emit_error(name, "no case file given");
            for (const std::string& path : state->files) {
                try {
                    inputs.push_back(homcalc::load_case_file(path));
                } catch (const homcalc::InvalidInput& e) {
                    return emit_error(name, e.what());
                }
            }
        }

        int worst = 0;
        for (const Json& input : inputs) worst = std::max(worst, run_one(name, input, opts));
        return worst;
    }
    return 2;
}
