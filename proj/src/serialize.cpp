#include "jspec/serialize.hpp"

namespace jspec {

namespace {

using nlohmann::json;

json rat_json(const Rat& r) { return rat_string(r); }

json rat_array(const std::vector<Rat>& values) {
  json out = json::array();
  for (const Rat& v : values) out.push_back(rat_json(v));
  return out;
}

json int_array(const std::vector<Int>& values) {
  json out = json::array();
  for (const Int& v : values) out.push_back(v.get_str());
  return out;
}

}  // namespace

nlohmann::json to_json(const Spectrum& sp) {
  return {
      {"n", sp.n},
      {"k", sp.k},
      {"profile", rat_array(sp.profile)},
      {"lambdas", rat_array(sp.lambdas)},
      {"multiplicities", int_array(sp.multiplicities)},
  };
}

nlohmann::json to_json(const DenseCheckReport& report) {
  return {
      {"n", report.n},
      {"k", report.k},
      {"annihilation_ok", report.annihilation_ok},
      {"trace_ok", report.trace_ok},
      {"multiplicities_ok", report.multiplicities_ok},
      {"all_ok", report.all_ok()},
      {"detail", report.detail},
  };
}

nlohmann::json to_json(const HoffmanReport& report) {
  return {
      {"N", report.num_vertices.get_str()},
      {"degree", rat_json(report.degree)},
      {"lambda_min", rat_json(report.lambda_min)},
      {"bound", rat_json(report.bound)},
      {"bound_decimal", rat_double(report.bound)},
      {"bound_floor", report.bound_floor.get_str()},
  };
}

nlohmann::json to_json(const TheoremReport& report) {
  json lambdas = {
      {"lambda0", rat_json(report.lambda0)},
      {"lambda1", rat_json(report.lambda1)},
      {"lambda2", report.lambda2 ? json(rat_string(*report.lambda2)) : json()},
      {"lambda3", report.lambda3 ? json(rat_string(*report.lambda3)) : json()},
  };
  return {
      {"k", report.k},
      {"n", report.n},
      {"lambdas", lambdas},
      {"closed_forms_ok", report.closed_forms_ok},
      {"tail_ok", report.tail_ok},
      {"tail_envelope_ok", report.tail_envelope_ok},
      {"hoffman_ratio", rat_json(report.hoffman_ratio)},
      {"hoffman_value", rat_json(report.hoffman_value)},
      {"hoffman_value_decimal", rat_double(report.hoffman_value)},
      {"target", report.target.get_str()},
      {"construction_size", report.construction_size.get_str()},
      {"verdict", report.verdict},
  };
}

nlohmann::json to_json(const EigenspaceProfile& profile) {
  return {
      {"n", profile.n},
      {"k", profile.k},
      {"family_size", profile.family_size.get_str()},
      {"norms", rat_array(profile.norms)},
  };
}

nlohmann::json to_json(const SchemeAxiomReport& report) {
  return {
      {"n", report.n},
      {"k", report.k},
      {"vertices", report.num_vertices},
      {"relations", report.num_relations},
      {"partition_ok", report.partition_ok},
      {"diagonal_ok", report.diagonal_ok},
      {"symmetry_ok", report.symmetry_ok},
      {"intersection_numbers_ok", report.intersection_numbers_ok},
      {"intersection_numbers", report.intersection_numbers},
      {"all_ok", report.all_ok()},
  };
}

nlohmann::json family_to_json(const Family& fam, bool one_indexed) {
  json members = json::array();
  for (const KSubset& member : fam.members) {
    json elems = json::array();
    for (int e : member.elements) elems.push_back(one_indexed ? e + 1 : e);
    members.push_back(elems);
  }
  return {
      {"n", fam.n},
      {"k", fam.k},
      {"size", fam.size()},
      {"provenance", provenance_name(fam.provenance)},
      {"one_indexed", one_indexed},
      {"members", members},
  };
}

nlohmann::json to_json(const MisResult& result, bool one_indexed) {
  return {
      {"size", result.size},
      {"optimal", result.optimal},
      {"nodes_explored", result.nodes_explored},
      {"budget_exhausted", result.budget_exhausted},
      {"witness", family_to_json(result.witness, one_indexed)},
  };
}

nlohmann::json to_json(const FamilyCensus& census, bool one_indexed) {
  json families = json::array();
  for (size_t i = 0; i < census.families.size(); ++i) {
    json entry = family_to_json(census.families[i], one_indexed);
    entry["class"] = family_class_name(census.classes[i]);
    families.push_back(std::move(entry));
  }
  return {
      {"n", census.params.n},
      {"k", census.params.k},
      {"t", census.params.t},
      {"target_size", census.target_size},
      {"total", census.families.size()},
      {"pair_junta", census.pair_junta_count},
      {"sporadic", census.sporadic_count},
      {"other", census.other_count},
      {"families", families},
  };
}

nlohmann::json to_json(const ProjectivePlane& plane) {
  json lines = json::array();
  for (const auto& line : plane.lines) lines.push_back(line);
  return {
      {"q", plane.q},
      {"points", plane.num_points},
      {"lines", lines},
  };
}

nlohmann::json to_json(const PlaneClique& clique, bool one_indexed) {
  return {
      {"certified", clique.certified},
      {"clique_size", clique.lines.size()},
      {"family", family_to_json(clique.lines, one_indexed)},
  };
}

nlohmann::json to_json(const BruckRyserResult& result) {
  json out = {
      {"order", result.order},
      {"verdict", result.excluded ? "Excluded" : "NotExcluded"},
      {"reason", result.reason},
  };
  if (result.two_squares)
    out["two_squares"] = {result.two_squares->first, result.two_squares->second};
  return out;
}

}  // namespace jspec
