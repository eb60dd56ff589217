#include "distmagic/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace distmagic {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected {\"n\": ..., \"edges\": [...]}");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("graph json: n must be an integer");
    Graph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("graph json: each edge must be [i, j]");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u >= v)
            throw std::invalid_argument("graph json: edge endpoints must satisfy i < j");
        if (g.has_edge(u, v))
            throw std::invalid_argument("graph json: duplicate edge [" + std::to_string(u) +
                                        "," + std::to_string(v) + "]");
        g.add_edge(u, v);
    }
    return g;
}

json labeling_to_json(const Labeling& f) { return {{"labels", f}}; }

Labeling labeling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        throw std::invalid_argument("labeling json: expected {\"labels\": [...]}");
    Labeling f;
    for (const auto& x : j["labels"]) {
        if (!x.is_number_integer())
            throw std::invalid_argument("labeling json: labels must be integers");
        f.push_back(x.get<int>());
    }
    return f;
}

json profile_to_json(const WeightProfile& p) {
    json out{{"kind", to_string(p.kind)}, {"weights", p.weights}};
    if (p.kind == WeightProfile::Kind::Magic) out["c"] = p.c;
    if (p.kind == WeightProfile::Kind::Progression) {
        out["a"] = p.a;
        out["d"] = p.d;
    }
    return out;
}

json verdict_to_json(const CriterionVerdict& v) {
    json out{{"criterion", v.criterion}, {"verdict", to_string(v.verdict)}};
    if (!v.witness_pairs.empty()) {
        json pairs = json::array();
        for (auto [a, b] : v.witness_pairs) pairs.push_back({a, b});
        out["witness_pairs"] = std::move(pairs);
    }
    if (v.forced_a) out["forced_a"] = *v.forced_a;
    if (!v.trace.empty()) out["trace"] = v.trace;
    for (const auto& [key, value] : v.data) out["data"][key] = value;
    return out;
}

json eit_to_json(const EitSchedule& s) {
    json opponents = json::object();
    for (int t = 0; t < s.teams; ++t)
        opponents[std::to_string(t + 1)] = s.opponents[t];
    return {{"teams", s.teams},
            {"rounds", s.rounds},
            {"strength", s.strength},
            {"opponents", std::move(opponents)}};
}

json search_result_to_json(const SearchResult& r) {
    json out{{"outcome", to_string(r.outcome)},
             {"nodes", r.stats.nodes},
             {"prunes",
              {{"weight", r.stats.prune_weight},
               {"forced", r.stats.prune_forced},
               {"bound", r.stats.prune_bound}}}};
    if (r.labeling) out["labeling"] = *r.labeling;
    if (r.profile) out["profile"] = profile_to_json(*r.profile);
    if (r.count > 0 || r.outcome == SearchResult::Outcome::ExhaustedNone)
        out["count"] = r.count;
    return out;
}

std::string to_dot(const Graph& g, const Labeling* f) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  v" << v << " [label=\"v" << v;
        if (f) os << "\\nf=" << (*f)[v];
        os << "\"];\n";
    }
    for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace distmagic
