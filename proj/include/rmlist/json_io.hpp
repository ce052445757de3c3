#pragma once

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "rmlist/lift.hpp"
#include "rmlist/witness.hpp"

namespace rmlist::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr uint64_t kDefaultScanBudget = uint64_t{1} << 24;

json field_to_json(const FieldParams& p);
FieldParams field_from_json(const json& j);

/// Elements serialize as coordinate arrays over GF(p); "zero", "one",
/// "generator" and integer indices are accepted on input.
json elem_to_json(const Field& F, const FieldElement& a);
FieldElement elem_from_json(const Field& F, const json& j);

json poly_to_json(const Field& F, const SigmaPoly& f);
SigmaPoly poly_from_json(const Field& F, const json& j);

json word_to_json(const Field& F, std::span<const FieldElement> w);
std::vector<FieldElement> word_from_json(const Field& F, const json& j);

json family_spec_to_json(const Field& F, const FamilySpec& spec);
FamilySpec family_spec_from_json(const Field& F, const json& j);
json family_to_json(const Field& F, const SubspacePolyFamily& fam, bool include_members);

json descriptor_to_json(const Field& F, const CodeDescriptor& d);
CodeDescriptor descriptor_from_json(const Field& F, const json& j);

json points_to_json(const Field& F, const PointSpec& p);
PointSpec points_from_json(const Field& F, const json& j);

json code_summary_to_json(const EvalCode& code);

/// Self-contained witness report (embeds field, descriptor and points).
json report_to_json(const EvalCode& code, const WitnessReport& rep);

struct LoadedReport {
    std::unique_ptr<Field> field;
    std::optional<EvalCode> code;
    WitnessReport report;
};
LoadedReport report_from_json(const json& j);

json recipe_to_json(const Field& F, const WitnessRecipe& r);
WitnessRecipe recipe_from_json(const Field& F, const json& j);

json claims_to_json(const Field& F, const std::vector<Claim>& claims);
std::string claims_to_csv(const std::vector<Claim>& claims);

/// Minimal structural validation against the shipped schemas; returns the
/// list of violations (empty = valid).
std::vector<std::string> validate_witness_report(const json& j);
std::vector<std::string> validate_experiment_recipe(const json& j);

/// Executes a named experiment recipe end to end: build the field and code,
/// run the witness construction at the requested verification level, check
/// the lifted ball injection, and assemble the deterministic report (wall
/// clock lives under "timing", everything else replays byte-identically).
json run_experiment(const json& recipe, const Big& budget);

json read_json_file(const std::string& path);
void write_json_atomic(const std::string& path, const json& j);

}  // namespace rmlist::io
