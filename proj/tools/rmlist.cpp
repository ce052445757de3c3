// Command-line front end: field construction, sigma-polynomial operations,
// family generation, code distances, witness construction/verification,
// radius bounds, subspace lifting, theorem analysis and recipe replay.
//
// Exit codes: 0 success/verified, 1 usage or internal error, 2 hypothesis
// violation, 3 verification failure (a promised bound was not met).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "rmlist/json_io.hpp"

using namespace rmlist;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitVerification = 3;

struct CommonOpts {
    std::string out_path;
    bool force = false;
};

Big scan_budget(const CommonOpts& c) {
    return c.force ? (Big(1) << 32) : Big(io::kDefaultScanBudget);
}

void emit(const CommonOpts& c, const json& j) {
    if (c.out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        io::write_json_atomic(c.out_path, j);
    }
}

void emit_text(const CommonOpts& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.out_path);
        out << text;
    }
}

std::unique_ptr<Field> field_from_args(uint32_t p, uint32_t ell, uint32_t m, uint32_t s,
                                        const std::string& field_json_path) {
    if (!field_json_path.empty()) {
        return std::make_unique<Field>(io::field_from_json(io::read_json_file(field_json_path)));
    }
    return std::make_unique<Field>(p, ell, m, s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric list-decodability toolkit"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("-o,--out", common.out_path, "write the JSON result to this file");
    app.add_flag("--force", common.force, "lift the 2^24-word exhaustive scan guard");

    // shared field options
    uint32_t p = 2, ell = 1, m = 4, s = 1;
    std::string field_json;
    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("-p", p, "characteristic");
        cmd->add_option("--ell", ell, "q = p^ell");
        cmd->add_option("-m", m, "extension degree over GF(q)");
        cmd->add_option("-s", s, "Frobenius step, gcd(s, m) = 1");
        cmd->add_option("--field", field_json, "field spec JSON file (overrides p/ell/m/s)");
    };

    // ---- field -----------------------------------------------------------
    auto* cmd_field = app.add_subcommand("field", "construct a field tower and print its spec");
    cmd_field->fallthrough();
    add_field_opts(cmd_field);
    cmd_field->callback([&] {
        auto F = field_from_args(p, ell, m, s, field_json);
        json out = io::field_to_json(F->params());
        out["q"] = F->q();
        out["size"] = F->size();
        out["generator"] = io::elem_to_json(*F, F->multiplicative_generator());
        emit(common, out);
    });

    // ---- poly ------------------------------------------------------------
    auto* cmd_poly = app.add_subcommand("poly", "sigma-polynomial operations");
    cmd_poly->fallthrough();
    add_field_opts(cmd_poly);
    std::string poly_coeffs, poly_rhs, poly_op = "kernel", poly_at;
    cmd_poly->add_option("--coeffs", poly_coeffs, "coefficients JSON, low to high")->required();
    cmd_poly->add_option("--op", poly_op,
                         "evaluate|kernel|rank|adjoint|shifted-adjoint|is-subspace|compose|add");
    cmd_poly->add_option("--rhs", poly_rhs, "second polynomial (compose/add)");
    cmd_poly->add_option("--at", poly_at, "evaluation point (evaluate)");
    cmd_poly->callback([&] {
        auto F = field_from_args(p, ell, m, s, field_json);
        SigmaPoly f = io::poly_from_json(*F, json::parse(poly_coeffs));
        json out;
        if (poly_op == "evaluate") {
            FieldElement x = io::elem_from_json(*F, json::parse(poly_at));
            out["value"] = io::elem_to_json(*F, f(x));
        } else if (poly_op == "kernel") {
            FqSubspace K = kernel(f);
            out["dim"] = K.dim();
            json basis = json::array();
            for (const auto& b : K.basis_elements()) basis.push_back(io::elem_to_json(*F, b));
            out["basis"] = basis;
        } else if (poly_op == "rank") {
            out["rank"] = rank(f);
        } else if (poly_op == "adjoint") {
            out["poly"] = io::poly_to_json(*F, adjoint(f));
        } else if (poly_op == "shifted-adjoint") {
            out["poly"] = io::poly_to_json(*F, shifted_adjoint(f));
        } else if (poly_op == "is-subspace") {
            out["is_subspace_poly"] = is_subspace_poly(f);
        } else if (poly_op == "compose" || poly_op == "add") {
            SigmaPoly g = io::poly_from_json(*F, json::parse(poly_rhs));
            out["poly"] = io::poly_to_json(*F, poly_op == "compose" ? f.compose(g) : f + g);
        } else {
            throw CLI::ValidationError("--op", "unknown operation");
        }
        emit(common, out);
    });

    // ---- family ----------------------------------------------------------
    auto* cmd_family = app.add_subcommand("family", "enumerate a subspace-polynomial family");
    cmd_family->fallthrough();
    add_field_opts(cmd_family);
    std::string family_spec;
    bool family_members = true;
    cmd_family->add_option("--spec", family_spec, "family spec JSON")->required();
    cmd_family->add_flag("--summary-only{false}", family_members, "omit the member list");
    cmd_family->callback([&] {
        auto F = field_from_args(p, ell, m, s, field_json);
        FamilySpec spec = io::family_spec_from_json(*F, json::parse(family_spec));
        SubspacePolyFamily fam = generate_family(*F, spec);
        emit(common, io::family_to_json(*F, fam, family_members));
    });

    // ---- code ------------------------------------------------------------
    auto* cmd_code = app.add_subcommand("code", "build a code, measure distance, check extremality");
    cmd_code->fallthrough();
    add_field_opts(cmd_code);
    std::string code_json, code_points, code_action = "build";
    cmd_code->add_option("--descriptor", code_json, "code descriptor JSON")->required();
    cmd_code->add_option("--points", code_points, "point spec JSON")->required();
    cmd_code->add_option("--action", code_action, "build|mindist|singleton");
    cmd_code->callback([&] {
        auto F = field_from_args(p, ell, m, s, field_json);
        EvalCode code = EvalCode::build(*F, io::descriptor_from_json(*F, json::parse(code_json)),
                                        io::points_from_json(*F, json::parse(code_points)));
        if (code_action == "mindist" || code_action == "singleton")
            code.min_distance(scan_budget(common));
        json out = io::code_summary_to_json(code);
        if (code_action == "singleton") {
            SingletonResult sr = code.singleton_check(scan_budget(common));
            out["singleton"] = json{{"is_mrd", sr.is_mrd},
                                    {"defect_log_q", sr.defect_log_q},
                                    {"degenerate", sr.degenerate}};
        }
        emit(common, out);
    });

    // ---- bounds ----------------------------------------------------------
    auto* cmd_bounds = app.add_subcommand("bounds", "radius threshold and counting bounds");
    cmd_bounds->fallthrough();
    uint32_t b_m = 8, b_n = 8, b_h = 2, g_n = 4, g_r = 2;
    uint64_t g_q = 2;
    double b_eps = 0.0;
    bool do_gaussian = false;
    cmd_bounds->add_option("-m", b_m, "row dimension");
    cmd_bounds->add_option("-n", b_n, "code length");
    cmd_bounds->add_option("--width", b_h, "contained window width h");
    cmd_bounds->add_option("--eps", b_eps, "0 <= eps < 1");
    cmd_bounds->add_flag("--gaussian", do_gaussian, "also print [n r]_q");
    cmd_bounds->add_option("--gn", g_n, "gaussian n");
    cmd_bounds->add_option("--gr", g_r, "gaussian r");
    cmd_bounds->add_option("--gq", g_q, "gaussian q");
    cmd_bounds->callback([&] {
        json out;
        try {
            JohnsonRadius r = johnson_like_radius(b_m, b_n, b_h, b_eps);
            out["radius_threshold"] = json{{"value", r.value},
                                           {"first_integer_radius", r.first_integer}};
        } catch (const NegativeRadicand& e) {
            out["radius_threshold"] = json{{"defined", false}, {"reason", e.what()}};
        }
        if (do_gaussian)
            out["gaussian_binomial"] = big_to_string(gaussian_binomial(g_n, g_r, g_q));
        emit(common, out);
    });

    // ---- witness ---------------------------------------------------------
    auto* cmd_witness = app.add_subcommand("witness", "build or verify a witness report");
    cmd_witness->fallthrough();
    auto* w_build = cmd_witness->add_subcommand("build", "construct a witness from a spec file");
    w_build->fallthrough();
    std::string wspec_path;
    bool w_constructive = false;
    w_build->add_option("spec", wspec_path, "witness spec JSON file")->required();
    w_build->add_flag("--constructive", w_constructive, "skip the exhaustive ball scan");
    w_build->callback([&] {
        json spec = io::read_json_file(wspec_path);
        Field F(io::field_from_json(spec.at("field")));
        EvalCode code =
            EvalCode::build(F, io::descriptor_from_json(F, spec.at("code").at("descriptor")),
                            io::points_from_json(F, spec.at("code").at("points")));
        WitnessRecipe recipe = io::recipe_from_json(F, spec.at("witness"));
        WitnessOptions opts;
        opts.exhaustive = !w_constructive;
        opts.budget = scan_budget(common);
        WitnessReport rep = run_recipe(code, recipe, opts);
        emit(common, io::report_to_json(code, rep));
        if (!rep.verified) std::exit(kExitVerification);
    });
    auto* w_verify = cmd_witness->add_subcommand("verify", "re-verify a report file");
    w_verify->fallthrough();
    std::string wreport_path;
    bool w_exhaustive = false;
    w_verify->add_option("report", wreport_path, "witness report JSON file")->required();
    w_verify->add_flag("--exhaustive", w_exhaustive, "re-run the exhaustive ball scan");
    w_verify->callback([&] {
        io::LoadedReport lr = io::report_from_json(io::read_json_file(wreport_path));
        bool ok = verify_witness(*lr.code, lr.report, w_exhaustive, scan_budget(common));
        json out{{"verified", ok},
                 {"list_size", lr.report.list.size()},
                 {"bound", big_to_string(lr.report.bound)}};
        if (lr.report.checks.exhaustive_done)
            out["exhaustive_count"] = big_to_string(lr.report.checks.exhaustive_count);
        emit(common, out);
        if (!ok) std::exit(kExitVerification);
    });
    cmd_witness->require_subcommand(1);

    // ---- lift --------------------------------------------------------------
    auto* cmd_lift = app.add_subcommand("lift", "lifted-code view of a witness report");
    cmd_lift->fallthrough();
    std::string lift_report_path;
    cmd_lift->add_option("report", lift_report_path, "witness report JSON file")->required();
    cmd_lift->callback([&] {
        io::LoadedReport lr = io::report_from_json(io::read_json_file(lift_report_path));
        LiftBallResult lb = verify_lift_ball(*lr.code, lr.report);
        json out{{"ball_injection", lb.ok},
                 {"subspace_radius", lb.subspace_radius},
                 {"lifted_list_bound", big_to_string(lb.lifted_list_bound)}};
        if (lr.code->size() <= 512) {
            LiftedCodeParams lp = lift_code(*lr.code, scan_budget(common));
            out["params"] = json{{"ambient", lp.ambient},
                                 {"size", big_to_string(lp.size)},
                                 {"ds", lp.ds},
                                 {"dim", lp.dim},
                                 {"distance_law_verified", lp.distance_law_verified}};
        }
        emit(common, out);
        if (!lb.ok) std::exit(kExitVerification);
    });

    // ---- analyze -----------------------------------------------------------
    auto* cmd_analyze = app.add_subcommand("analyze", "evaluate the radius theorems for a code");
    cmd_analyze->fallthrough();
    add_field_opts(cmd_analyze);
    std::string an_code, an_points, an_format = "json";
    cmd_analyze->add_option("--descriptor", an_code, "code descriptor JSON")->required();
    cmd_analyze->add_option("--points", an_points, "point spec JSON")->required();
    cmd_analyze->add_option("--format", an_format, "json|csv");
    cmd_analyze->callback([&] {
        auto F = field_from_args(p, ell, m, s, field_json);
        EvalCode code = EvalCode::build(*F, io::descriptor_from_json(*F, json::parse(an_code)),
                                        io::points_from_json(*F, json::parse(an_points)));
        auto claims = analyze_decodability(code, scan_budget(common));
        if (an_format == "csv") {
            emit_text(common, io::claims_to_csv(claims));
        } else {
            emit(common, io::claims_to_json(*F, claims));
        }
    });

    // ---- run ----------------------------------------------------------------
    auto* cmd_run = app.add_subcommand("run", "replay an experiment recipe");
    cmd_run->fallthrough();
    std::string run_path;
    cmd_run->add_option("recipe", run_path, "experiment recipe JSON file")->required();
    cmd_run->callback([&] {
        json report = io::run_experiment(io::read_json_file(run_path), scan_budget(common));
        emit(common, report);
        if (!report.at("verified").get<bool>()) std::exit(kExitVerification);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violation: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const FamilyNotInPol& e) {
        std::cerr << "hypothesis violation: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const ContainmentFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kExitVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}
