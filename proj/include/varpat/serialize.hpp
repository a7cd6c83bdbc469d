#pragma once

// JSON views of the library's result types. Variables are written by name,
// words in the text syntax.

#include <vector>

#include "json.hpp"
#include "varpat/core.hpp"
#include "varpat/equations.hpp"
#include "varpat/gapped.hpp"
#include "varpat/graph.hpp"
#include "varpat/matchers.hpp"
#include "varpat/structure.hpp"

namespace varpat {

using Json = nlohmann::ordered_json;

Json to_json(const ClassReport& r, const Pattern& p);
// Inverse of to_json; witness names are resolved against p.
ClassReport class_report_from_json(const Json& j, const Pattern& p);

// Images of the variables that occur in `symbols`, keyed by name.
Json to_json(const Substitution& h, std::span<const Symbol> symbols, const std::vector<std::string>& names);
Json to_json(const MatchResult& r, const Pattern& p);

Json to_json(const std::vector<GappedOccurrence>& list);

Json to_json(const EquationClassReport& r);

Json to_json(const PatternGraph& g);
Json to_json(const Multigraph& g);

}  // namespace varpat
