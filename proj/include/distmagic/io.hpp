// JSON and DOT serialization. Graph files are {"n": N, "edges": [[i,j],...]}
// with 0-based endpoints i < j and no duplicates; labeling files are
// {"labels": [...]} with labels[v] = f(v).
#pragma once

#include "distmagic/constructions.hpp"
#include "distmagic/criteria.hpp"
#include "distmagic/graph.hpp"
#include "distmagic/search.hpp"

#include <json.hpp>

#include <string>

namespace distmagic {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json labeling_to_json(const Labeling& f);
Labeling labeling_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const WeightProfile& p);
nlohmann::json verdict_to_json(const CriterionVerdict& v);
nlohmann::json eit_to_json(const EitSchedule& s);
nlohmann::json search_result_to_json(const SearchResult& r);

std::string to_dot(const Graph& g, const Labeling* f = nullptr);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace distmagic
