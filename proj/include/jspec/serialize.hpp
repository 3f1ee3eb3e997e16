#pragma once

#include <json.hpp>

#include "jspec/bose_mesner.hpp"
#include "jspec/bounds.hpp"
#include "jspec/combinatorics.hpp"
#include "jspec/extremal.hpp"
#include "jspec/plane.hpp"

namespace jspec {

// All rationals render as lowest-terms "p" / "p/q" strings; every payload is
// deterministic for identical inputs.

nlohmann::json to_json(const Spectrum& sp);
nlohmann::json to_json(const DenseCheckReport& report);
nlohmann::json to_json(const HoffmanReport& report);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const EigenspaceProfile& profile);
nlohmann::json to_json(const SchemeAxiomReport& report);
nlohmann::json to_json(const MisResult& result, bool one_indexed = false);
nlohmann::json to_json(const FamilyCensus& census, bool one_indexed = false);
nlohmann::json to_json(const ProjectivePlane& plane);
nlohmann::json to_json(const PlaneClique& clique, bool one_indexed = false);
nlohmann::json to_json(const BruckRyserResult& result);

// Family as an array of sorted integer arrays; elements shift to 1-based when
// one_indexed is set (display matching the usual convention in print).
nlohmann::json family_to_json(const Family& fam, bool one_indexed = false);

}  // namespace jspec
