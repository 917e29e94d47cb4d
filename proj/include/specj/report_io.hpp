// Structured (JSON) and human-readable renderings of reports and plans.
// The structured form round-trips: from_json(to_json(x)) == x.
#pragma once

#include <string>

#include <json.hpp>

#include "specj/conformance.hpp"
#include "specj/corpus.hpp"
#include "specj/spec_diff.hpp"

namespace specj {

nlohmann::json to_json(const MatchReport& report);
MatchReport match_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CorpusReport& report);
CorpusReport corpus_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ModificationPlan& plan);
ModificationPlan plan_from_json(const nlohmann::json& j);

std::string render_text(const MatchReport& report);
std::string render_text(const CorpusReport& report);
std::string render_text(const ModificationPlan& plan);

} // namespace specj
