#include "groupdet/report.hpp"

#include "groupdet/errors.hpp"

namespace groupdet {

std::string to_string(CheckMode mode) { return mode == CheckMode::kPit ? "pit" : "symbolic"; }

CheckMode parse_mode(const std::string& text) {
  if (text == "pit") return CheckMode::kPit;
  if (text == "symbolic") return CheckMode::kSymbolic;
  throw ParseError("unknown mode '" + text + "' (expected symbolic or pit)");
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["lemma"] = r.theorem;
  j["group"] = r.group;
  j["subgroup"] = r.subgroup;
  j["passed"] = r.passed;
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  j["mode"] = to_string(r.mode);
  j["n_points"] = r.n_points;
  j["tolerance"] = r.tolerance;
  j["residual"] = r.residual;
  j["residuals"] = r.residuals;
  j["seed"] = r.seed;
  j["notes"] = r.notes;
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.theorem = j.at("lemma").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.subgroup = j.at("subgroup").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.n_points = j.at("n_points").get<int>();
  r.tolerance = j.at("tolerance").get<double>();
  r.residual = j.at("residual").get<double>();
  r.residuals = j.at("residuals").get<std::vector<double>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace groupdet
