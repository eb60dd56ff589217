// Command-line front end: construct families and products, apply the
// closed-form labelings, verify labelings, run the feasibility checks, the
// exact search, the tournament export and the results-table report.
//
// Exit codes: 0 success, 2 claim refuted (a verifier disagreed with a
// prediction), 3 input error, 4 node budget exceeded.

#include "distmagic/constructions.hpp"
#include "distmagic/criteria.hpp"
#include "distmagic/family_spec.hpp"
#include "distmagic/io.hpp"
#include "distmagic/recipes.hpp"
#include "distmagic/report.hpp"
#include "distmagic/search.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace distmagic;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

// Graph arguments are either a JSON file or a family/product spec string.
Graph resolve_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) return graph_from_json(load_json_file(arg));
    return build_graph_spec(arg);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
}

int cmd_construct(const std::string& spec, bool dot, const std::string& out_path) {
    const Graph g = resolve_graph(spec);
    emit(dot ? to_dot(g) : graph_to_json(g).dump(2) + "\n", out_path);
    return kExitOk;
}

int cmd_products(const std::string& op, const std::string& lhs, const std::string& rhs,
                 bool dot, const std::string& out_path) {
    if (op != "lex" && op != "dir" && op != "join")
        throw std::invalid_argument("products: operator must be lex, dir or join");
    return cmd_construct(op + "(" + lhs + "," + rhs + ")", dot, out_path);
}

int cmd_label(const std::string& recipe, int n, bool as_json,
              const std::string& out_graph, const std::string& out_labeling) {
    const RecipeResult r = apply_recipe(recipe, n);
    const WeightProfile prof = classify(r.lg.graph, r.lg.labels);

    bool match = prof.kind == r.expected_kind;
    if (r.expected_kind == WeightProfile::Kind::Magic) match = match && prof.c == r.expected_c;
    if (r.expected_kind == WeightProfile::Kind::Progression)
        match = match && prof.a == r.expected_a && prof.d == r.expected_d;

    if (!out_graph.empty()) save_json_file(out_graph, graph_to_json(r.lg.graph));
    if (!out_labeling.empty()) save_json_file(out_labeling, labeling_to_json(r.lg.labels));

    if (as_json) {
        json out{{"recipe", recipe},
                 {"n", n},
                 {"graph", graph_to_json(r.lg.graph)},
                 {"labeling", labeling_to_json(r.lg.labels)},
                 {"profile", profile_to_json(prof)},
                 {"matches_prediction", match}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "recipe " << recipe << " n=" << n << ": order " << r.lg.graph.order()
                  << ", " << r.lg.graph.edge_count() << " edges\n";
        std::cout << "labels:";
        for (int x : r.lg.labels) std::cout << " " << x;
        std::cout << "\nclassified: " << to_string(prof.kind);
        if (prof.kind == WeightProfile::Kind::Magic) std::cout << " c=" << prof.c;
        if (prof.kind == WeightProfile::Kind::Progression)
            std::cout << " a=" << prof.a << " d=" << prof.d;
        std::cout << (match ? " (as predicted)" : " (PREDICTION MISMATCH)") << "\n";
    }
    return match ? kExitOk : kExitRefuted;
}

int cmd_verify(const std::string& graph_arg, const std::string& labeling_path, bool as_json) {
    const Graph g = resolve_graph(graph_arg);
    const Labeling f = labeling_from_json(load_json_file(labeling_path));
    require_valid_labeling(g, f);
    const WeightProfile prof = classify(g, f);
    TwinPairing pairing;
    const bool balanced = is_balanced_distance_magic(g, f, &pairing);

    if (as_json) {
        json out{{"profile", profile_to_json(prof)}, {"balanced", balanced}};
        if (balanced) {
            json pairs = json::array();
            for (auto [u, v] : pairing.pairs) pairs.push_back({u, v});
            out["twin_pairs"] = std::move(pairs);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(prof.kind);
        if (prof.kind == WeightProfile::Kind::Magic) std::cout << " c=" << prof.c;
        if (prof.kind == WeightProfile::Kind::Progression)
            std::cout << " a=" << prof.a << " d=" << prof.d;
        std::cout << "\nweights:";
        for (long long w : prof.weights) std::cout << " " << w;
        std::cout << "\nbalanced: " << (balanced ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& criterion, const std::vector<std::string>& args, bool as_json) {
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw std::invalid_argument("check " + criterion + ": expected " +
                                        std::to_string(count) + " argument(s)");
    };
    CriterionVerdict v;
    if (criterion == "odd_regular") {
        need(1);
        v = check_odd_regular(resolve_graph(args[0]));
    } else if (criterion == "shared_neighborhood") {
        need(1);
        v = check_shared_neighborhood(resolve_graph(args[0]));
    } else if (criterion == "delta_full") {
        need(1);
        v = check_delta_full(resolve_graph(args[0]));
    } else if (criterion == "ad_bounds") {
        need(3);
        v = check_ad_regular_bounds(std::stoi(args[0]), std::stoi(args[1]), std::stoi(args[2]));
    } else if (criterion == "nminus3") {
        need(2);
        v = check_nminus3_regular(std::stoi(args[0]), std::stoi(args[1]));
    } else if (criterion == "cpow") {
        need(2);
        v = check_cpow(std::stoi(args[0]), std::stoi(args[1]));
    } else if (criterion == "lex_c4") {
        need(1);
        v = check_lex_c4(std::stoi(args[0]));
    } else if (criterion == "direct_c4") {
        need(1);
        v = check_direct_c4(std::stoi(args[0]));
    } else {
        throw std::invalid_argument("unknown criterion '" + criterion + "'");
    }

    if (as_json) {
        std::cout << verdict_to_json(v).dump(2) << "\n";
    } else {
        std::cout << v.criterion << ": " << to_string(v.verdict) << "\n";
        for (const auto& line : v.trace) std::cout << "  " << line << "\n";
        if (!v.witness_pairs.empty()) {
            std::cout << "  witness pairs:";
            for (auto [a, b] : v.witness_pairs) std::cout << " (" << a << "," << b << ")";
            std::cout << "\n";
        }
        if (v.forced_a) std::cout << "  forced a = " << *v.forced_a << "\n";
    }
    return kExitOk;
}

int cmd_search(const std::string& graph_arg, const std::string& target, int d, long long c,
               const std::string& mode, long long budget, int threads, bool as_json) {
    const Graph g = resolve_graph(graph_arg);
    SearchSpec spec;
    if (target == "magic") {
        spec.target = SearchSpec::Target::Magic;
        if (c >= 0) spec.magic_c = c;
    } else if (target == "prog") {
        spec.target = SearchSpec::Target::Progression;
        if (d >= 0) spec.d = d;
    } else if (target == "distinct") {
        spec.target = SearchSpec::Target::AllDistinct;
    } else {
        throw std::invalid_argument("search: target must be magic, prog or distinct");
    }
    if (mode == "find") spec.mode = SearchSpec::Mode::FindOne;
    else if (mode == "decide") spec.mode = SearchSpec::Mode::Decide;
    else if (mode == "count") spec.mode = SearchSpec::Mode::CountAll;
    else throw std::invalid_argument("search: mode must be find, decide or count");
    spec.node_budget = budget;
    spec.threads = threads;

    const SearchResult res = search(g, spec);
    if (as_json) {
        std::cout << search_result_to_json(res).dump(2) << "\n";
    } else {
        std::cout << to_string(res.outcome);
        if (spec.mode == SearchSpec::Mode::CountAll) std::cout << " count=" << res.count;
        std::cout << " nodes=" << res.stats.nodes << "\n";
        if (res.labeling) {
            std::cout << "labels:";
            for (int x : *res.labeling) std::cout << " " << x;
            std::cout << "\n";
            const auto& prof = *res.profile;
            std::cout << to_string(prof.kind);
            if (prof.kind == WeightProfile::Kind::Magic) std::cout << " c=" << prof.c;
            if (prof.kind == WeightProfile::Kind::Progression)
                std::cout << " a=" << prof.a << " d=" << prof.d;
            std::cout << "\n";
        }
    }
    return res.outcome == SearchResult::Outcome::BudgetExceeded ? kExitBudget : kExitOk;
}

int cmd_eit(const std::string& graph_arg, const std::string& labeling_path,
            const std::string& recipe, int n) {
    EitSchedule schedule;
    if (!recipe.empty()) {
        const RecipeResult r = apply_recipe(recipe, n);
        schedule = eit_export(r.lg.graph, r.lg.labels);
    } else {
        const Graph g = resolve_graph(graph_arg);
        const Labeling f = labeling_from_json(load_json_file(labeling_path));
        schedule = eit_export(g, f);
    }
    std::cout << eit_to_json(schedule).dump(2) << "\n";
    return kExitOk;
}

int cmd_table1(bool as_json, long long budget, int threads) {
    Table1Options opts;
    opts.budget = budget;
    opts.threads = threads;
    const Table1Report rep = run_table1(opts);
    if (as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        print_report(std::cout, rep);
    return rep.any_refuted() ? kExitRefuted : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance magic and (a,d)-distance antimagic labeling toolkit"};
    app.require_subcommand(1);

    std::string spec, lhs, rhs, op, recipe, graph_arg, labeling_path, criterion;
    std::string out_path, out_graph, out_labeling;
    std::string target = "magic", mode = "find";
    std::vector<std::string> check_args;
    bool dot = false, as_json = false;
    int n = 0, d = -1, threads = 1;
    long long c = -1, budget = 100'000'000;

    auto* construct = app.add_subcommand("construct", "build a graph from a spec string");
    construct->add_option("spec", spec, "family or product spec, e.g. harary:3,5")->required();
    construct->add_flag("--dot", dot, "emit DOT instead of JSON");
    construct->add_option("--out", out_path, "write to a file instead of stdout");

    auto* products = app.add_subcommand("products", "build a product of two graphs");
    products->add_option("op", op, "lex | dir | join")->required();
    products->add_option("lhs", lhs, "first factor spec")->required();
    products->add_option("rhs", rhs, "second factor spec")->required();
    products->add_flag("--dot", dot, "emit DOT instead of JSON");
    products->add_option("--out", out_path, "write to a file instead of stdout");

    auto* label = app.add_subcommand("label", "apply a closed-form labeling recipe");
    label->add_option("recipe", recipe, "one of: h_even h_odd anti_2n_2n3 anti_4n1_4n4 anti_h4 direct_c4_5 dagger_even dagger_odd")
        ->required();
    label->add_option("n", n, "family parameter");
    label->add_flag("--json", as_json, "machine-readable output");
    label->add_option("--out-graph", out_graph, "write the graph JSON here");
    label->add_option("--out-labeling", out_labeling, "write the labeling JSON here");

    auto* verify = app.add_subcommand("verify", "classify a labeling of a graph");
    verify->add_option("graph", graph_arg, "graph JSON file or spec string")->required();
    verify->add_option("labeling", labeling_path, "labeling JSON file")->required();
    verify->add_flag("--json", as_json, "machine-readable output");

    auto* check = app.add_subcommand("check", "run a feasibility criterion");
    check->add_option("criterion", criterion,
                      "odd_regular | shared_neighborhood | delta_full | ad_bounds | nminus3 | cpow | lex_c4 | direct_c4")
        ->required();
    check->add_option("args", check_args, "criterion arguments (graph/spec or numbers)");
    check->add_flag("--json", as_json, "machine-readable output");

    auto* search_cmd = app.add_subcommand("search", "exact backtracking search");
    search_cmd->add_option("graph", graph_arg, "graph JSON file or spec string")->required();
    search_cmd->add_option("--target", target, "magic | prog | distinct");
    search_cmd->add_option("--d", d, "progression difference (prog target)");
    search_cmd->add_option("--c", c, "pin the magic constant");
    search_cmd->add_option("--mode", mode, "find | decide | count");
    search_cmd->add_option("--budget", budget, "node budget");
    search_cmd->add_option("--threads", threads, "parallel branches over the first label");
    search_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* eit = app.add_subcommand("eit", "export an equalized incomplete tournament");
    eit->add_option("graph", graph_arg, "graph JSON file or spec string");
    eit->add_option("labeling", labeling_path, "labeling JSON file");
    eit->add_option("--recipe", recipe, "use a labeling recipe instead of files");
    eit->add_option("--n", n, "recipe parameter");

    auto* table1 = app.add_subcommand("table1", "evaluate the known-results table");
    table1->add_flag("--json", as_json, "machine-readable output");
    table1->add_option("--budget", budget, "node budget per oracle call");
    table1->add_option("--threads", threads, "search threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (construct->parsed()) return cmd_construct(spec, dot, out_path);
        if (products->parsed()) return cmd_products(op, lhs, rhs, dot, out_path);
        if (label->parsed()) return cmd_label(recipe, n, as_json, out_graph, out_labeling);
        if (verify->parsed()) return cmd_verify(graph_arg, labeling_path, as_json);
        if (check->parsed()) return cmd_check(criterion, check_args, as_json);
        if (search_cmd->parsed())
            return cmd_search(graph_arg, target, d, c, mode, budget, threads, as_json);
        if (eit->parsed()) {
            if (recipe.empty() && (graph_arg.empty() || labeling_path.empty()))
                throw std::invalid_argument("eit: need a graph and labeling, or --recipe");
            return cmd_eit(graph_arg, labeling_path, recipe, n);
        }
        if (table1->parsed()) return cmd_table1(as_json, budget, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitRefuted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
