#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmlist/json_io.hpp"

using namespace rmlist;
using io::json;

namespace {

json binomial_recipe() {
    return json::parse(R"({
      "schema_version": 1,
      "name": "gabidulin_n4_binomial",
      "field": { "p": 2, "ell": 1, "m": 4, "s": 1 },
      "code": {
        "descriptor": { "kind": "gabidulin", "k": 1 },
        "points": { "type": "subfield_basis", "n": 4, "beta": "one" }
      },
      "witness": {
        "mode": "subfield", "l": 2, "h": 1, "j": 0,
        "family": { "kind": "binomial", "n": 4, "t": 2 }
      },
      "verification": "exhaustive"
    })");
}

}  // namespace

TEST_CASE("field and element serialization round-trips") {
    Field F(3, 1, 3, 1);
    json fj = io::field_to_json(F.params());
    Field G(io::field_from_json(fj));
    CHECK(G.params() == F.params());

    FieldElement g = F.multiplicative_generator();
    CHECK(io::elem_from_json(F, io::elem_to_json(F, g)) == g);
    CHECK(io::elem_from_json(F, json("one")) == F.one());
    CHECK(io::elem_from_json(F, json("generator")) == g);
    CHECK(io::elem_from_json(F, json(5)) == F.from_index(5));
    CHECK_THROWS_AS(io::elem_from_json(F, json("nope")), ParamViolation);

    SigmaPoly f = SigmaPoly::monomial(F, 2, g) - SigmaPoly::identity(F);
    CHECK(io::poly_from_json(F, io::poly_to_json(F, f)) == f);
}

TEST_CASE("descriptor and point-spec serialization round-trips") {
    Field F(2, 1, 4, 1);
    for (const char* txt :
         {R"({"kind":"gabidulin","k":2})", R"({"kind":"power_gabidulin","h":2,"j":1})",
          R"({"kind":"cj","k":3,"j":1})"}) {
        json d = json::parse(txt);
        CodeDescriptor desc = io::descriptor_from_json(F, d);
        json back = io::descriptor_to_json(F, desc);
        CHECK(back == d);
    }
    json pts = json::parse(R"({"type":"subfield_basis","n":4,"beta":[1,0,0,0]})");
    PointSpec ps = io::points_from_json(F, pts);
    CHECK(io::points_to_json(F, ps) == pts);
}

TEST_CASE("witness reports validate, round-trip and re-verify") {
    json recipe = binomial_recipe();
    Field F(io::field_from_json(recipe["field"]));
    EvalCode code = EvalCode::build(F, io::descriptor_from_json(F, recipe["code"]["descriptor"]),
                                    io::points_from_json(F, recipe["code"]["points"]));
    SubspacePolyFamily fam = gen_binomials(F, 4, 2);
    WitnessReport rep = build_witness_subfield(code, 2, 1, 0, fam);
    json rj = io::report_to_json(code, rep);
    CHECK(io::validate_witness_report(rj).empty());

    io::LoadedReport lr = io::report_from_json(rj);
    CHECK(lr.report.radius == rep.radius);
    CHECK(lr.report.bound == rep.bound);
    CHECK(verify_witness(*lr.code, lr.report, /*exhaustive=*/true, Big(1) << 20));
    // serialization is stable across the round trip
    CHECK(io::report_to_json(*lr.code, lr.report).dump() == rj.dump());

    json broken = rj;
    broken.erase("bound");
    CHECK(!io::validate_witness_report(broken).empty());
    json wrong_version = rj;
    wrong_version["schema_version"] = 2;
    CHECK(!io::validate_witness_report(wrong_version).empty());
}

TEST_CASE("experiment runs are deterministic modulo timing") {
    json recipe = binomial_recipe();
    CHECK(io::validate_experiment_recipe(recipe).empty());
    json a = io::run_experiment(recipe, Big(1) << 24);
    json b = io::run_experiment(recipe, Big(1) << 24);
    CHECK(a["verified"].get<bool>());
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
    // the embedded witness report validates against the schema
    CHECK(io::validate_witness_report(a["witness"]).empty());
    // family summary reproduces the closed-form size
    CHECK(a["family"]["expected_size"] == 5);
    CHECK(a["family"]["actual_size"] == 5);
    CHECK(a["family"]["all_max_kernel"] == true);
    // lifted view carries the doubled distance parameters
    CHECK(a["lift"]["ball_injection"] == true);
}

TEST_CASE("experiment recipe validation rejects malformed input") {
    json recipe = binomial_recipe();
    recipe.erase("name");
    CHECK(!io::validate_experiment_recipe(recipe).empty());
    json recipe2 = binomial_recipe();
    recipe2["code"].erase("points");
    CHECK(!io::validate_experiment_recipe(recipe2).empty());
}

TEST_CASE("claims serialize to JSON and CSV") {
    Field F(2, 1, 4, 1);
    PointSpec ps;
    ps.kind = PointSpec::Kind::SubfieldBasis;
    ps.n = 4;
    ps.beta = F.one();
    EvalCode code = EvalCode::build(F, CodeDescriptor::gabidulin(2), ps);
    auto claims = analyze_decodability(code, Big(1) << 20);
    json cj = io::claims_to_json(F, claims);
    CHECK(cj.is_array());
    CHECK(cj.size() == claims.size());
    std::string csv = io::claims_to_csv(claims);
    CHECK(csv.find("theorem,applicable") == 0);
    CHECK(csv.find("binomial_radius,true") != std::string::npos);
}

TEST_CASE("hat-mode recipe runs through the experiment runner") {
    json recipe = json::parse(R"({
      "schema_version": 1,
      "name": "powergab_n4_hat_trace",
      "field": { "p": 2, "ell": 1, "m": 4, "s": 1 },
      "code": {
        "descriptor": { "kind": "power_gabidulin", "h": 2, "j": 1 },
        "points": { "type": "subfield_basis", "n": 4, "beta": "one" }
      },
      "witness": {
        "mode": "subfield_hat", "l": 2, "h": 2, "j": 0,
        "family": { "kind": "trace", "n": 4, "t": 2, "adjoint": true }
      },
      "verification": "exhaustive"
    })");
    json rep = io::run_experiment(recipe, Big(1) << 24);
    CHECK(rep["verified"].get<bool>());
    CHECK(rep["witness"]["bound"] == "5");
}
