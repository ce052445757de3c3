#include "rmlist/json_io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rmlist::io {

namespace {

json coords_json(const FieldElement& a) {
    json out = json::array();
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i]);
    return out;
}

[[noreturn]] void bad(const std::string& what) { throw ParamViolation("json: " + what); }

uint32_t get_u32(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) bad(std::string(key) + " must be a nonnegative integer");
    return j[key].get<uint32_t>();
}

uint32_t get_u32_or(const json& j, const char* key, uint32_t fall) {
    if (!j.contains(key)) return fall;
    return get_u32(j, key);
}

std::string get_str(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) bad(std::string(key) + " must be a string");
    return j[key].get<std::string>();
}

}  // namespace

json field_to_json(const FieldParams& p) {
    return json{{"p", p.p}, {"ell", p.ell}, {"m", p.m}, {"s", p.s}, {"modulus", p.modulus}};
}

FieldParams field_from_json(const json& j) {
    FieldParams p;
    p.p = get_u32(j, "p");
    p.ell = get_u32_or(j, "ell", 1);
    p.m = get_u32(j, "m");
    p.s = get_u32_or(j, "s", 1);
    if (j.contains("modulus")) p.modulus = j["modulus"].get<std::vector<uint32_t>>();
    return p;
}

json elem_to_json(const Field&, const FieldElement& a) { return coords_json(a); }

FieldElement elem_from_json(const Field& F, const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "zero") return F.zero();
        if (s == "one") return F.one();
        if (s == "generator") return F.multiplicative_generator();
        bad("unknown element literal '" + s + "'");
    }
    if (j.is_number_unsigned()) return F.from_index(j.get<uint64_t>());
    if (!j.is_array()) bad("element must be a coordinate array, index or literal");
    auto coords = j.get<std::vector<uint32_t>>();
    return F.from_coords(coords);
}

json poly_to_json(const Field& F, const SigmaPoly& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(elem_to_json(F, c));
    return out;
}

SigmaPoly poly_from_json(const Field& F, const json& j) {
    if (!j.is_array()) bad("polynomial must be an array of coefficients");
    std::vector<FieldElement> coeffs;
    for (const auto& c : j) coeffs.push_back(elem_from_json(F, c));
    return SigmaPoly::from_coeffs(F, std::move(coeffs));
}

json word_to_json(const Field& F, std::span<const FieldElement> w) {
    json out = json::array();
    for (const auto& c : w) out.push_back(elem_to_json(F, c));
    return out;
}

std::vector<FieldElement> word_from_json(const Field& F, const json& j) {
    if (!j.is_array()) bad("word must be an array of elements");
    std::vector<FieldElement> out;
    for (const auto& c : j) out.push_back(elem_from_json(F, c));
    return out;
}

json family_spec_to_json(const Field& F, const FamilySpec& spec) {
    json out{{"kind", family_kind_name(spec.kind)}, {"n", spec.n}};
    if (spec.kind == FamilyKind::Pigeonhole) {
        out["points"] = word_to_json(F, spec.points);
        out["r"] = spec.subspace_dim;
        out["g"] = spec.agreement;
        return out;
    }
    out["t"] = spec.t;
    if (spec.kind == FamilyKind::HuangF || spec.kind == FamilyKind::HuangG ||
        spec.kind == FamilyKind::Q || spec.kind == FamilyKind::QPrime) {
        out["k"] = spec.k;
        out["r"] = spec.r;
    }
    if (spec.take_adjoint) out["adjoint"] = true;
    return out;
}

FamilySpec family_spec_from_json(const Field& F, const json& j) {
    FamilySpec spec;
    auto kind = family_kind_from_name(get_str(j, "kind"));
    if (!kind) bad("unknown family kind");
    spec.kind = *kind;
    spec.n = get_u32_or(j, "n", F.m());
    if (spec.kind == FamilyKind::Pigeonhole) {
        if (!j.contains("points")) bad("pigeonhole family needs points");
        spec.points = word_from_json(F, j["points"]);
        spec.subspace_dim = get_u32(j, "r");
        spec.agreement = get_u32(j, "g");
        return spec;
    }
    spec.t = get_u32(j, "t");
    spec.k = get_u32_or(j, "k", 0);
    spec.r = get_u32_or(j, "r", 0);
    spec.take_adjoint = j.value("adjoint", false);
    return spec;
}

json family_to_json(const Field& F, const SubspacePolyFamily& fam, bool include_members) {
    json out;
    out["spec"] = family_spec_to_json(F, fam.spec);
    out["expected_size"] = fam.expected_size;
    out["actual_size"] = fam.members.size();
    out["sigma_degree"] = fam.sigma_degree;
    bool all_max = true, all_monic = true;
    for (const auto& f : fam.members) {
        if (f.is_zero() || kernel(f).dim() != static_cast<uint32_t>(f.degree())) {
            all_max = false;
            break;
        }
        if (!f.is_monic()) all_monic = false;
    }
    out["all_max_kernel"] = all_max;
    out["all_monic"] = all_monic;
    if (include_members) {
        json arr = json::array();
        for (const auto& f : fam.members) arr.push_back(poly_to_json(F, f));
        out["members"] = arr;
    }
    return out;
}

namespace {

const char* map_kind_name(AdditiveMapSpec::Kind k) {
    switch (k) {
        case AdditiveMapSpec::Kind::Zero: return "zero";
        case AdditiveMapSpec::Kind::Identity: return "identity";
        case AdditiveMapSpec::Kind::EtaQPow: return "eta_qpow";
        case AdditiveMapSpec::Kind::EtaPPow: return "eta_ppow";
        case AdditiveMapSpec::Kind::TraceHalf: return "trace_half";
        case AdditiveMapSpec::Kind::Matrix: return "matrix";
    }
    return "?";
}

json map_to_json(const Field& F, const AdditiveMapSpec& m) {
    json out{{"kind", map_kind_name(m.kind)}};
    if (m.kind == AdditiveMapSpec::Kind::EtaQPow || m.kind == AdditiveMapSpec::Kind::EtaPPow) {
        out["eta"] = elem_to_json(F, m.eta);
        out["h"] = m.h;
    }
    if (m.kind == AdditiveMapSpec::Kind::Matrix) out["cols"] = m.matrix_cols;
    return out;
}

AdditiveMapSpec map_from_json(const Field& F, const json& j) {
    AdditiveMapSpec m;
    const std::string kind = get_str(j, "kind");
    if (kind == "zero") m.kind = AdditiveMapSpec::Kind::Zero;
    else if (kind == "identity") m.kind = AdditiveMapSpec::Kind::Identity;
    else if (kind == "eta_qpow") m.kind = AdditiveMapSpec::Kind::EtaQPow;
    else if (kind == "eta_ppow") m.kind = AdditiveMapSpec::Kind::EtaPPow;
    else if (kind == "trace_half") m.kind = AdditiveMapSpec::Kind::TraceHalf;
    else if (kind == "matrix") m.kind = AdditiveMapSpec::Kind::Matrix;
    else bad("unknown additive map kind '" + kind + "'");
    if (m.kind == AdditiveMapSpec::Kind::EtaQPow || m.kind == AdditiveMapSpec::Kind::EtaPPow) {
        m.eta = elem_from_json(F, j.at("eta"));
        m.h = get_u32(j, "h");
    }
    if (m.kind == AdditiveMapSpec::Kind::Matrix)
        m.matrix_cols = j.at("cols").get<std::vector<uint32_t>>();
    return m;
}

}  // namespace

json descriptor_to_json(const Field& F, const CodeDescriptor& d) {
    switch (d.kind) {
        case CodeDescriptor::Kind::Gabidulin:
            return json{{"kind", "gabidulin"}, {"k", d.k}};
        case CodeDescriptor::Kind::PowerGabidulin:
            return json{{"kind", "power_gabidulin"}, {"h", d.h}, {"j", d.j}};
        case CodeDescriptor::Kind::TwistedSheekey:
            return json{{"kind", "twisted_sheekey"}, {"k", d.k}, {"h", d.h},
                        {"eta", elem_to_json(F, d.eta)}};
        case CodeDescriptor::Kind::Hf1f2:
            return json{{"kind", "hf1f2"},
                        {"k", d.k},
                        {"f1", map_to_json(F, d.f1)},
                        {"f2", map_to_json(F, d.f2)}};
        case CodeDescriptor::Kind::Cj:
            return json{{"kind", "cj"}, {"k", d.k}, {"j", d.j}};
    }
    bad("unknown descriptor kind");
}

CodeDescriptor descriptor_from_json(const Field& F, const json& j) {
    const std::string kind = get_str(j, "kind");
    if (kind == "gabidulin") return CodeDescriptor::gabidulin(get_u32(j, "k"));
    if (kind == "power_gabidulin")
        return CodeDescriptor::power_gabidulin(get_u32(j, "h"), get_u32(j, "j"));
    if (kind == "twisted_sheekey")
        return CodeDescriptor::twisted_sheekey(get_u32(j, "k"), elem_from_json(F, j.at("eta")),
                                               get_u32(j, "h"));
    if (kind == "hf1f2")
        return CodeDescriptor::hf1f2(get_u32(j, "k"), map_from_json(F, j.at("f1")),
                                     map_from_json(F, j.at("f2")));
    if (kind == "cj") return CodeDescriptor::cj(get_u32(j, "k"), get_u32(j, "j"));
    bad("unknown code kind '" + kind + "'");
}

json points_to_json(const Field& F, const PointSpec& p) {
    if (p.kind == PointSpec::Kind::SubfieldBasis) {
        return json{{"type", "subfield_basis"}, {"n", p.n}, {"beta", elem_to_json(F, p.beta)}};
    }
    return json{{"type", "explicit"}, {"points", word_to_json(F, p.points)}};
}

PointSpec points_from_json(const Field& F, const json& j) {
    PointSpec p;
    const std::string type = get_str(j, "type");
    if (type == "subfield_basis") {
        p.kind = PointSpec::Kind::SubfieldBasis;
        p.n = get_u32(j, "n");
        p.beta = j.contains("beta") ? elem_from_json(F, j["beta"]) : F.one();
        return p;
    }
    if (type == "explicit") {
        p.kind = PointSpec::Kind::Explicit;
        p.points = word_from_json(F, j.at("points"));
        return p;
    }
    bad("unknown point spec type '" + type + "'");
}

json code_summary_to_json(const EvalCode& code) {
    const Field& F = code.field();
    json out;
    out["descriptor"] = descriptor_to_json(F, code.descriptor());
    out["points_spec"] = points_to_json(F, code.point_spec());
    out["points"] = word_to_json(F, code.points());
    out["n"] = code.n();
    out["size"] = big_to_string(code.size());
    out["dim_p"] = code.dim_p();
    if (auto d = code.cached_min_distance()) out["min_distance"] = *d;
    out["mrd_condition"] = json{{"checked", code.mrd_condition_checked()},
                                {"holds", code.mrd_condition_holds()}};
    return out;
}

json report_to_json(const EvalCode& code, const WitnessReport& rep) {
    const Field& F = code.field();
    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "witness_report";
    out["field"] = field_to_json(F.params());
    out["code"] = json{{"descriptor", descriptor_to_json(F, code.descriptor())},
                       {"points", points_to_json(F, code.point_spec())}};
    out["mode"] = witness_mode_name(rep.mode);
    json params;
    if (rep.mode == WitnessMode::GeneralBasis) {
        params["tau"] = rep.tau;
    } else {
        params["l"] = rep.l;
        if (rep.family_spec) params["family"] = family_spec_to_json(F, *rep.family_spec);
    }
    params["h"] = rep.h;
    params["j"] = rep.j;
    out["params"] = params;
    out["w"] = word_to_json(F, rep.w);
    out["radius"] = rep.radius;
    json lst = json::array();
    for (const auto& word : rep.list) lst.push_back(word_to_json(F, word));
    out["list"] = lst;
    out["list_size"] = rep.list.size();
    out["bound"] = big_to_string(rep.bound);
    out["verified"] = rep.verified;
    out["checks"] = json{{"w_not_in_code", rep.checks.w_not_in_code},
                         {"listed_in_code", rep.checks.listed_in_code},
                         {"distances_exact", rep.checks.distances_exact},
                         {"distinct", rep.checks.distinct},
                         {"size_ge_bound", rep.checks.size_ge_bound},
                         {"exhaustive_done", rep.checks.exhaustive_done},
                         {"exhaustive_count", big_to_string(rep.checks.exhaustive_count)}};
    json trace;
    trace["chosen_r"] = word_to_json(F, rep.chosen_r);
    trace["family_size"] = rep.family_size;
    if (rep.mode == WitnessMode::GeneralBasis) {
        trace["pigeonhole_key"] = rep.pigeonhole_key;
        trace["pigeonhole_groups"] = rep.pigeonhole_groups;
    }
    out["construction"] = trace;
    return out;
}

LoadedReport report_from_json(const json& j) {
    auto errs = validate_witness_report(j);
    if (!errs.empty()) bad("invalid witness report: " + errs.front());
    LoadedReport lr;
    lr.field = std::make_unique<Field>(field_from_json(j.at("field")));
    const Field& F = *lr.field;
    lr.code = EvalCode::build(F, descriptor_from_json(F, j.at("code").at("descriptor")),
                              points_from_json(F, j.at("code").at("points")));
    WitnessReport& rep = lr.report;
    auto mode = witness_mode_from_name(get_str(j, "mode"));
    if (!mode) bad("unknown witness mode");
    rep.mode = *mode;
    const json& params = j.at("params");
    rep.h = get_u32(params, "h");
    rep.j = get_u32(params, "j");
    if (rep.mode == WitnessMode::GeneralBasis) {
        rep.tau = get_u32(params, "tau");
    } else {
        rep.l = get_u32(params, "l");
        if (params.contains("family")) rep.family_spec = family_spec_from_json(F, params["family"]);
    }
    rep.w = word_from_json(F, j.at("w"));
    rep.radius = get_u32(j, "radius");
    for (const auto& word : j.at("list")) rep.list.push_back(word_from_json(F, word));
    rep.bound = Big(j.at("bound").get<std::string>());
    rep.verified = j.at("verified").get<bool>();
    const json& checks = j.at("checks");
    rep.checks.w_not_in_code = checks.at("w_not_in_code").get<bool>();
    rep.checks.listed_in_code = checks.at("listed_in_code").get<bool>();
    rep.checks.distances_exact = checks.at("distances_exact").get<bool>();
    rep.checks.distinct = checks.at("distinct").get<bool>();
    rep.checks.size_ge_bound = checks.at("size_ge_bound").get<bool>();
    rep.checks.exhaustive_done = checks.at("exhaustive_done").get<bool>();
    rep.checks.exhaustive_count = Big(checks.at("exhaustive_count").get<std::string>());
    if (j.contains("construction")) {
        const json& tr = j["construction"];
        if (tr.contains("chosen_r")) rep.chosen_r = word_from_json(F, tr["chosen_r"]);
        if (tr.contains("family_size")) rep.family_size = tr["family_size"].get<uint64_t>();
        if (tr.contains("pigeonhole_key"))
            rep.pigeonhole_key = tr["pigeonhole_key"].get<std::vector<uint64_t>>();
        if (tr.contains("pigeonhole_groups"))
            rep.pigeonhole_groups = tr["pigeonhole_groups"].get<uint64_t>();
    }
    return lr;
}

json recipe_to_json(const Field& F, const WitnessRecipe& r) {
    json out{{"mode", witness_mode_name(r.mode)}, {"h", r.h}, {"j", r.j}};
    if (r.mode == WitnessMode::GeneralBasis) {
        out["tau"] = r.tau;
    } else {
        out["l"] = r.l;
        if (r.family) out["family"] = family_spec_to_json(F, *r.family);
    }
    return out;
}

WitnessRecipe recipe_from_json(const Field& F, const json& j) {
    WitnessRecipe r;
    auto mode = witness_mode_from_name(get_str(j, "mode"));
    if (!mode) bad("unknown witness mode");
    r.mode = *mode;
    r.h = get_u32(j, "h");
    r.j = get_u32_or(j, "j", 0);
    if (r.mode == WitnessMode::GeneralBasis) {
        r.tau = get_u32(j, "tau");
    } else {
        r.l = get_u32(j, "l");
        if (j.contains("family")) r.family = family_spec_from_json(F, j["family"]);
    }
    return r;
}

json claims_to_json(const Field& F, const std::vector<Claim>& claims) {
    json arr = json::array();
    for (const Claim& c : claims) {
        json one{{"theorem", c.theorem_id}, {"applicable", c.applicable}};
        if (c.applicable) {
            one["radius_threshold"] = c.radius_threshold;
            one["at_all"] = c.at_all;
            if (c.recipe) one["recipe"] = recipe_to_json(F, *c.recipe);
        } else {
            one["failed_hypothesis"] = c.failed_hypothesis;
        }
        if (!c.note.empty()) one["note"] = c.note;
        arr.push_back(one);
    }
    return arr;
}

std::string claims_to_csv(const std::vector<Claim>& claims) {
    std::ostringstream os;
    os << "theorem,applicable,radius_threshold,at_all,failed_hypothesis\n";
    for (const Claim& c : claims) {
        os << c.theorem_id << ',' << (c.applicable ? "true" : "false") << ',';
        if (c.applicable) os << c.radius_threshold;
        os << ',' << (c.at_all ? "true" : "false") << ',';
        std::string fh = c.failed_hypothesis;
        for (char& ch : fh)
            if (ch == ',') ch = ';';
        os << fh << '\n';
    }
    return os.str();
}

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  std::vector<std::string>& errs, const char* ctx) {
    for (const char* k : keys) {
        if (!j.contains(k)) errs.push_back(std::string(ctx) + ": missing key '" + k + "'");
    }
}

}  // namespace

std::vector<std::string> validate_witness_report(const json& j) {
    std::vector<std::string> errs;
    if (!j.is_object()) {
        errs.push_back("report must be a JSON object");
        return errs;
    }
    require_keys(j,
                 {"schema_version", "kind", "field", "code", "mode", "params", "w", "radius",
                  "list", "list_size", "bound", "verified", "checks"},
                 errs, "report");
    if (!errs.empty()) return errs;
    if (j["schema_version"] != kSchemaVersion) errs.push_back("unsupported schema_version");
    if (j["kind"] != "witness_report") errs.push_back("kind must be 'witness_report'");
    if (!j["field"].is_object()) errs.push_back("field must be an object");
    else require_keys(j["field"], {"p", "ell", "m", "s", "modulus"}, errs, "field");
    if (!j["w"].is_array()) errs.push_back("w must be an array");
    if (!j["list"].is_array()) errs.push_back("list must be an array");
    if (!j["bound"].is_string()) errs.push_back("bound must be a decimal string");
    if (!j["verified"].is_boolean()) errs.push_back("verified must be a boolean");
    if (!j["checks"].is_object()) errs.push_back("checks must be an object");
    return errs;
}

std::vector<std::string> validate_experiment_recipe(const json& j) {
    std::vector<std::string> errs;
    if (!j.is_object()) {
        errs.push_back("recipe must be a JSON object");
        return errs;
    }
    require_keys(j, {"schema_version", "name", "field", "code", "witness"}, errs, "recipe");
    if (!errs.empty()) return errs;
    if (j["schema_version"] != kSchemaVersion) errs.push_back("unsupported schema_version");
    if (!j["field"].is_object()) errs.push_back("field must be an object");
    if (!j["code"].is_object() || !j["code"].contains("descriptor") || !j["code"].contains("points"))
        errs.push_back("code must carry descriptor and points");
    if (!j["witness"].is_object() || !j["witness"].contains("mode"))
        errs.push_back("witness must carry a mode");
    return errs;
}

json run_experiment(const json& recipe, const Big& budget) {
    auto errs = validate_experiment_recipe(recipe);
    if (!errs.empty()) bad("invalid recipe: " + errs.front());

    const auto t0 = std::chrono::steady_clock::now();
    Field F(field_from_json(recipe.at("field")));
    EvalCode code = EvalCode::build(F, descriptor_from_json(F, recipe.at("code").at("descriptor")),
                                    points_from_json(F, recipe.at("code").at("points")));
    WitnessOptions opts;
    opts.budget = budget;
    opts.exhaustive = recipe.value("verification", "exhaustive") == std::string("exhaustive");

    json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "experiment_report";
    out["name"] = recipe.at("name");
    out["inputs"] = recipe;
    out["field"] = field_to_json(F.params());

    const uint32_t d = code.min_distance(budget);
    SingletonResult singleton = code.singleton_check(budget);
    json code_summary = code_summary_to_json(code);
    code_summary["min_distance"] = d;
    code_summary["singleton"] = json{{"is_mrd", singleton.is_mrd},
                                     {"defect_log_q", singleton.defect_log_q},
                                     {"degenerate", singleton.degenerate}};
    out["code"] = code_summary;

    // radius thresholds for the code's free windows
    json bounds = json::object();
    json jr = json::array();
    for (auto [lo, hi] : code.free_windows()) {
        const uint32_t width = hi - lo + 1;
        json one{{"window", json::array({lo, hi})}, {"h", width}};
        try {
            JohnsonRadius r = johnson_like_radius(F.m(), code.n(), width, 0.0);
            one["value"] = r.value;
            one["first_integer_radius"] = r.first_integer;
        } catch (const NegativeRadicand&) {
            one["defined"] = false;
        }
        jr.push_back(one);
    }
    bounds["radius_thresholds"] = jr;
    out["bounds"] = bounds;

    // witness construction
    WitnessRecipe wrec = recipe_from_json(F, recipe.at("witness"));
    uint64_t scans = 0;
    json family_summary;
    WitnessReport rep;
    if (wrec.mode == WitnessMode::GeneralBasis) {
        rep = build_witness_general(code, wrec.tau, wrec.h, wrec.j, opts);
        bounds["list_bound"] = big_to_string(rep.bound);
    } else {
        if (!wrec.family) bad("subfield witness recipe needs a family");
        SubspacePolyFamily fam = generate_family(F, *wrec.family);
        family_summary = family_to_json(F, fam, /*include_members=*/false);
        rep = wrec.mode == WitnessMode::SubfieldBasis
                  ? build_witness_subfield(code, wrec.l, wrec.h, wrec.j, fam, opts)
                  : build_witness_subfield_hat(code, wrec.l, wrec.h, wrec.j, fam, opts);
    }
    if (opts.exhaustive) ++scans;
    if (!family_summary.is_null()) out["family"] = family_summary;
    out["witness"] = report_to_json(code, rep);
    out["bounds"]["list_bound"] = big_to_string(rep.bound);

    // lifted view
    json liftj;
    LiftBallResult lb = verify_lift_ball(code, rep);
    liftj["ball_injection"] = lb.ok;
    liftj["subspace_radius"] = lb.subspace_radius;
    liftj["lifted_list_bound"] = big_to_string(lb.lifted_list_bound);
    if (code.size() <= 512) {
        LiftedCodeParams lp = lift_code(code, budget);
        liftj["params"] = json{{"ambient", lp.ambient},
                               {"size", big_to_string(lp.size)},
                               {"ds", lp.ds},
                               {"dim", lp.dim},
                               {"distance_law_verified", lp.distance_law_verified}};
        scans += 1;
    }
    out["lift"] = liftj;

    out["verified"] = rep.verified && lb.ok;
    out["counters"] = json{{"code_size", big_to_string(code.size())},
                           {"exhaustive_scans", scans}};
    const auto t1 = std::chrono::steady_clock::now();
    out["timing"] = json{
        {"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_atomic(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write " + tmp);
        out << j.dump(2) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot rename into " + path);
}

}  // namespace rmlist::io
