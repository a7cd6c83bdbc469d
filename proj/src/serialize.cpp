#include "varpat/serialize.hpp"

#include <algorithm>

namespace varpat {

namespace {

Json edge_list(const std::vector<GraphEdge>& edges) {
  Json out = Json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

Json to_json(const ClassReport& r, const Pattern& p) {
  Json j;
  j["numVariables"] = r.num_variables;
  j["numRepeatedVariables"] = r.num_repeated_variables;
  j["numOneVarBlocks"] = r.num_one_var_blocks;
  j["scd"] = r.scd;
  j["locality"] = r.locality ? Json(*r.locality) : Json(nullptr);
  if (r.locality_witness) {
    Json names = Json::array();
    for (const auto id : r.locality_witness->order) names.push_back(p.variable_name(id));
    j["localityWitness"] = std::move(names);
  } else {
    j["localityWitness"] = nullptr;
  }
  j["isRegular"] = r.flags.is_regular;
  j["isNonCross"] = r.flags.is_non_cross;
  j["isNested"] = r.flags.is_nested;
  j["isStronglyNested"] = r.flags.is_strongly_nested;
  j["isCloselyEntwined"] = r.flags.is_closely_entwined;
  j["isMildlyEntwined"] = r.flags.is_mildly_entwined;
  if (r.repetition_structure) {
    j["repetitionStructure"] = {{"rootSkeletonLength", r.repetition_structure->root_skeleton_length},
                                {"exponent", r.repetition_structure->exponent}};
  } else {
    j["repetitionStructure"] = nullptr;
  }
  return j;
}

ClassReport class_report_from_json(const Json& j, const Pattern& p) {
  ClassReport r;
  r.num_variables = j.at("numVariables").get<std::size_t>();
  r.num_repeated_variables = j.at("numRepeatedVariables").get<std::size_t>();
  r.num_one_var_blocks = j.at("numOneVarBlocks").get<std::size_t>();
  r.scd = j.at("scd").get<std::size_t>();
  if (!j.at("locality").is_null()) r.locality = j.at("locality").get<std::size_t>();
  if (!j.at("localityWitness").is_null()) {
    MarkingSequence sigma;
    const auto& names = p.variable_names();
    for (const auto& name : j.at("localityWitness")) {
      const auto it = std::find(names.begin(), names.end(), name.get<std::string>());
      if (it == names.end()) throw Error("unknown variable in locality witness");
      sigma.order.push_back(static_cast<VariableId>(it - names.begin()));
    }
    r.locality_witness = std::move(sigma);
  }
  r.flags.is_regular = j.at("isRegular").get<bool>();
  r.flags.is_non_cross = j.at("isNonCross").get<bool>();
  r.flags.is_nested = j.at("isNested").get<bool>();
  r.flags.is_strongly_nested = j.at("isStronglyNested").get<bool>();
  r.flags.is_closely_entwined = j.at("isCloselyEntwined").get<bool>();
  r.flags.is_mildly_entwined = j.at("isMildlyEntwined").get<bool>();
  if (const auto& rs = j.at("repetitionStructure"); !rs.is_null()) {
    r.repetition_structure =
        RepetitionStructure{rs.at("rootSkeletonLength").get<std::size_t>(), rs.at("exponent").get<std::size_t>()};
  }
  return r;
}

Json to_json(const Substitution& h, std::span<const Symbol> symbols, const std::vector<std::string>& names) {
  std::vector<bool> occurs(names.size(), false);
  for (const Symbol& s : symbols) {
    if (s.is_variable()) occurs[s.value] = true;
  }
  Json j = Json::object();
  for (VariableId id = 0; id < names.size(); ++id) {
    if (occurs[id]) j[names[id]] = to_string(h.images.at(id));
  }
  return j;
}

Json to_json(const MatchResult& r, const Pattern& p) {
  Json j;
  j["matched"] = r.matched;
  j["witness"] = r.witness ? to_json(*r.witness, p.symbols(), p.variable_names()) : Json(nullptr);
  j["algorithm"] = std::string(to_string(r.algorithm_used));
  j["stats"] = {{"statesExplored", r.stats.states_explored}, {"candidatesTested", r.stats.candidates_tested}};
  return j;
}

Json to_json(const std::vector<GappedOccurrence>& list) {
  Json out = Json::array();
  for (const auto& o : list) {
    out.push_back({{"start", o.start}, {"arm", o.arm_length}, {"gap", o.gap_length}, {"kind", std::string(to_string(o.kind))}});
  }
  return out;
}

Json to_json(const EquationClassReport& r) {
  return {{"isQuadratic", r.is_quadratic},
          {"isRegularBothSides", r.is_regular_both_sides},
          {"isRegularOrdered", r.is_regular_ordered},
          {"isNonCrossBothSides", r.is_non_cross_both_sides},
          {"isOneRepeatedVariable", r.is_one_repeated_variable}};
}

Json to_json(const PatternGraph& g) {
  return {{"vertexCount", g.vertex_count},
          {"neighbourEdges", edge_list(g.neighbour_edges)},
          {"equalityEdges", edge_list(g.equality_edges)},
          {"terminalVertices", g.terminal_vertices}};
}

Json to_json(const Multigraph& g) { return {{"vertexCount", g.vertex_count}, {"edges", edge_list(g.edges)}}; }

}  // namespace varpat
