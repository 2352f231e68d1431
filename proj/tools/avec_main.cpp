#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "avec/connectivity.hpp"
#include "avec/enumerate.hpp"
#include "avec/extremal.hpp"
#include "avec/io.hpp"
#include "avec/metrics.hpp"
#include "avec/nordhaus_gaddum.hpp"
#include "avec/optimizer.hpp"
#include "avec/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

struct GraphInput {
    std::string graph_file;
    std::string weights_spec = "all-ones";  // "all-ones" or a file path
    bool allow_unnormalized = false;
};

avec::Graph load_graph(const GraphInput& in) {
    return avec::read_edge_list_file(in.graph_file).g;
}

avec::WeightFunction load_weights(const GraphInput& in, const avec::Graph& g) {
    avec::ParsedGraph parsed = avec::read_edge_list_file(in.graph_file);
    std::vector<double> w;
    if (in.weights_spec == "all-ones")
        w = parsed.had_weights ? parsed.weights : std::vector<double>(g.size(), 1.0);
    else
        w = avec::read_weights_file(in.weights_spec, g);
    auto wf = avec::WeightFunction::make(g, w, /*require_normalized=*/false);
    if (!wf.is_normalized()) {
        if (!in.allow_unnormalized)
            throw avec::NotNormalized("weight total " + fmt(wf.total()) + " != m = " +
                                      std::to_string(g.size()) +
                                      " (pass --allow-unnormalized to proceed)");
        std::cerr << "warning: weights are not normalized (total " << fmt(wf.total()) << ", m "
                  << g.size() << ")\n";
    }
    return wf;
}

json weights_json(const avec::Graph& g, const avec::WeightFunction& w) {
    json arr = json::array();
    for (int i = 0; i < g.size(); ++i)
        arr.push_back({{"u", g.edge(i).u}, {"v", g.edge(i).v}, {"w", w[i]}});
    return arr;
}

void print_weights(const avec::Graph& g, const avec::WeightFunction& w) {
    std::cout << std::setprecision(12);
    for (int i = 0; i < g.size(); ++i)
        std::cout << "  " << g.edge(i).u << " " << g.edge(i).v << "  " << w[i] << "\n";
}

void emit(const json& payload, bool as_json) {
    if (as_json) std::cout << payload.dump(2) << "\n";
}

int run_avec(const GraphInput& in, bool as_json) {
    avec::Graph g = load_graph(in);
    auto w = load_weights(in, g);
    auto profile = avec::eccentricity_profile(g, w);
    auto bounds = avec::bounds_for(g, w);

    bool violated = profile.avec < bounds.lower - avec::kRelTolerance * bounds.lower - 1e-9 ||
                    profile.avec > bounds.upper + avec::kRelTolerance * bounds.upper + 1e-9;
    if (!w.is_normalized()) violated = false;  // bounds only apply to normalized weightings

    if (as_json) {
        json out{{"command", "avec"},
                 {"inputs", {{"graph", in.graph_file}, {"weights", in.weights_spec}}},
                 {"results",
                  {{"ecc", profile.ecc},
                   {"EX", profile.total},
                   {"avec", profile.avec},
                   {"lower", bounds.lower},
                   {"upper", bounds.upper}}},
                 {"status", violated ? "violation" : "ok"}};
        emit(out, true);
    } else {
        std::cout << std::setprecision(12);
        std::cout << "n = " << g.order() << ", m = " << g.size() << "\n";
        for (int v = 0; v < g.order(); ++v)
            std::cout << "  e_w(" << v << ") = " << profile.ecc[v] << "\n";
        std::cout << "EX   = " << profile.total << "\n";
        std::cout << "avec = " << profile.avec << "\n";
        std::cout << "bounds: [" << bounds.lower << ", " << bounds.upper << "]"
                  << (violated ? "  VIOLATED" : "") << "\n";
    }
    return violated ? kExitViolation : kExitOk;
}

int run_extremal(const GraphInput& in, const std::string& direction, bool as_json) {
    avec::Graph g = load_graph(in);
    const bool tree = g.size() == g.order() - 1;
    avec::WeightFunction w = [&] {
        if (direction == "min")
            return tree ? avec::tree_min_weights(g) : avec::spanning_tree_zero_weights(g);
        return tree ? avec::tree_max_weights(g, g.edge(0)) : avec::mincut_weights(g);
    }();
    double achieved = avec::eccentricity_profile(g, w).avec;
    auto bounds = avec::bounds_for(g);
    double bound = direction == "min" ? bounds.lower : bounds.upper;
    bool violated = !avec::nearly_equal(achieved, bound);

    if (as_json) {
        json out{{"command", "extremal"},
                 {"inputs", {{"graph", in.graph_file}, {"direction", direction}}},
                 {"results",
                  {{"weights", weights_json(g, w)},
                   {"avec", achieved},
                   {"bound", bound}}},
                 {"status", violated ? "violation" : "ok"}};
        emit(out, true);
    } else {
        std::cout << std::setprecision(12);
        std::cout << "extremal " << direction << " weights:\n";
        print_weights(g, w);
        std::cout << "avec  = " << achieved << "\n";
        std::cout << "bound = " << bound << (violated ? "  NOT ATTAINED" : "") << "\n";
    }
    return violated ? kExitViolation : kExitOk;
}

int run_optimize(const GraphInput& in, const std::string& direction, const std::string& method,
                 int resolution, int restarts, std::uint64_t seed, bool as_json) {
    avec::Graph g = load_graph(in);
    avec::Direction dir = direction == "min" ? avec::Direction::min : avec::Direction::max;
    avec::OptimizationResult result =
        method == "grid" ? avec::grid_search(g, dir, resolution)
                         : avec::local_search(g, dir, restarts, seed);

    auto bounds = avec::bounds_for(g);
    double closed_form = dir == avec::Direction::min ? bounds.lower : bounds.upper;
    double gap = result.best_value - closed_form;
    // The search may never beat a proven bound.
    bool violated = dir == avec::Direction::min ? gap < -1e-9 : gap > 1e-9;

    if (as_json) {
        json out{{"command", "optimize"},
                 {"inputs",
                  {{"graph", in.graph_file},
                   {"direction", direction},
                   {"method", method},
                   {"resolution", resolution},
                   {"restarts", restarts},
                   {"seed", seed}}},
                 {"results",
                  {{"best_value", result.best_value},
                   {"best_weights", weights_json(g, result.best_weights)},
                   {"evaluations", result.evaluations},
                   {"closed_form", closed_form},
                   {"gap", gap}}},
                 {"status", violated ? "violation" : "ok"}};
        emit(out, true);
    } else {
        std::cout << std::setprecision(12);
        std::cout << "best " << direction << " avec = " << result.best_value << "  ("
                  << result.evaluations << " evaluations)\n";
        print_weights(g, result.best_weights);
        std::cout << "closed-form " << direction << " = " << closed_form << ", gap = " << gap
                  << (violated ? "  BOUND VIOLATED" : "") << "\n";
    }
    return violated ? kExitViolation : kExitOk;
}

int run_verify(const std::string& scope, int max_n, int samples, std::uint64_t seed,
               bool as_json) {
    avec::VerifyResult result;
    if (scope == "trees")
        result = avec::verify_trees(max_n, samples, seed);
    else if (scope == "graphs")
        result = avec::verify_graphs(max_n, samples, seed);
    else if (scope == "ng")
        result = avec::verify_ng(max_n, samples, seed);
    else
        throw CLI::ValidationError("--scope must be trees, graphs, or ng");

    if (as_json) {
        json out{{"command", "verify"},
                 {"inputs",
                  {{"scope", scope}, {"max_n", max_n}, {"samples", samples}, {"seed", seed}}},
                 {"results",
                  {{"structures", result.structures},
                   {"checks", result.checks},
                   {"violations", result.violations}}},
                 {"status", result.ok() ? "ok" : "violation"}};
        emit(out, true);
    } else {
        std::cout << "verified " << result.checks << " checks over " << result.structures << " "
                  << scope << " structures\n";
        for (const auto& v : result.violations) std::cout << "VIOLATION: " << v << "\n";
        std::cout << (result.ok() ? "ok" : "violation") << "\n";
    }
    return result.ok() ? kExitOk : kExitViolation;
}

int run_ng(const GraphInput& in, bool as_json) {
    avec::Graph g = load_graph(in);
    avec::PairCase kind = avec::classify_pair(g);
    if (kind == avec::PairCase::complement_disconnected) {
        if (as_json)
            emit(json{{"command", "ng"},
                      {"inputs", {{"graph", in.graph_file}}},
                      {"results", {{"case", avec::to_string(kind)}}},
                      {"status", "ok"}},
                 true);
        else
            std::cout << "case: complement_disconnected (no bounds apply)\n";
        return kExitOk;
    }

    auto report = avec::ng_bounds(g);
    auto lower = avec::ng_witnesses(g, avec::NGTarget::sum_lower);
    auto upper = avec::ng_witnesses(g, avec::NGTarget::sum_upper);
    bool violated = lower.achieved < report.sum_lower - 1e-9 ||
                    upper.achieved > report.sum_upper + 1e-9;

    if (as_json) {
        avec::Graph gbar = avec::complement(g);
        json out{{"command", "ng"},
                 {"inputs", {{"graph", in.graph_file}}},
                 {"results",
                  {{"case", avec::to_string(report.kind)},
                   {"sum_lower", report.sum_lower},
                   {"sum_upper", report.sum_upper},
                   {"prod_lower", report.prod_lower},
                   {"prod_upper", report.prod_upper},
                   {"witness_sum_lower",
                    {{"g", weights_json(g, lower.weights_g)},
                     {"gbar", weights_json(gbar, lower.weights_gbar)},
                     {"achieved", lower.achieved}}},
                   {"witness_sum_upper",
                    {{"g", weights_json(g, upper.weights_g)},
                     {"gbar", weights_json(gbar, upper.weights_gbar)},
                     {"achieved", upper.achieved}}}}},
                 {"status", violated ? "violation" : "ok"}};
        emit(out, true);
    } else {
        std::cout << std::setprecision(12);
        std::cout << "case: " << avec::to_string(report.kind) << "\n";
        std::cout << "sum bounds:  [" << report.sum_lower << ", " << report.sum_upper << "]\n";
        std::cout << "prod bounds: [" << report.prod_lower << ", " << report.prod_upper << "]\n";
        std::cout << "witness sum (lower target) = " << lower.achieved << "\n";
        std::cout << "witness sum (upper target) = " << upper.achieved << "\n";
        if (violated) std::cout << "VIOLATED\n";
    }
    return violated ? kExitViolation : kExitOk;
}

int run_gen(const std::string& kind, int n, const std::string& output) {
    avec::Graph g = avec::generate(avec::parse_graph_kind(kind), n);
    if (output.empty() || output == "-") {
        avec::write_edge_list(std::cout, g);
    } else {
        std::ofstream out(output);
        if (!out) throw avec::ParseError("cannot open output file: " + output);
        avec::write_edge_list(out, g);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-weighted average eccentricity toolkit"};
    app.require_subcommand(1);

    GraphInput input;
    bool as_json = false;
    std::string direction = "min", method = "local", scope = "trees", kind = "path";
    std::string output;
    int resolution = 8, restarts = 20, max_n = 8, samples = 100, n = 5;
    std::uint64_t seed = 42;

    auto add_graph_opts = [&](CLI::App* cmd, bool with_weights) {
        cmd->add_option("--graph", input.graph_file, "edge-list input file")->required();
        if (with_weights) {
            cmd->add_option("--weights", input.weights_spec, "weights file or 'all-ones'");
            cmd->add_flag("--allow-unnormalized", input.allow_unnormalized,
                          "warn instead of failing on unnormalized weights");
        }
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    auto* avec_cmd = app.add_subcommand("avec", "per-vertex eccentricities, EX, and avec");
    add_graph_opts(avec_cmd, true);

    auto* extremal_cmd = app.add_subcommand("extremal", "extremal weight construction");
    add_graph_opts(extremal_cmd, false);
    extremal_cmd->add_option("--direction", direction, "min|max")
        ->check(CLI::IsMember({"min", "max"}));

    auto* optimize_cmd = app.add_subcommand("optimize", "numerical search over the weight simplex");
    add_graph_opts(optimize_cmd, false);
    optimize_cmd->add_option("--direction", direction, "min|max")
        ->check(CLI::IsMember({"min", "max"}));
    optimize_cmd->add_option("--method", method, "grid|local")
        ->check(CLI::IsMember({"grid", "local"}));
    optimize_cmd->add_option("--resolution", resolution, "grid resolution");
    optimize_cmd->add_option("--restarts", restarts, "local search restarts");
    optimize_cmd->add_option("--seed", seed, "random seed");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive + randomized bound verification");
    verify_cmd->add_option("--scope", scope, "trees|graphs|ng")
        ->check(CLI::IsMember({"trees", "graphs", "ng"}));
    verify_cmd->add_option("--max-n", max_n, "largest order to enumerate");
    verify_cmd->add_option("--samples", samples, "random weightings per structure");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* ng_cmd = app.add_subcommand("ng", "Nordhaus-Gaddum bounds for g and its complement");
    add_graph_opts(ng_cmd, false);

    auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
    gen_cmd->add_option("kind", kind, "path|star|cycle|complete|broom")->required();
    gen_cmd->add_option("n", n, "vertex count")->required();
    gen_cmd->add_option("--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*avec_cmd) return run_avec(input, as_json);
        if (*extremal_cmd) return run_extremal(input, direction, as_json);
        if (*optimize_cmd)
            return run_optimize(input, direction, method, resolution, restarts, seed, as_json);
        if (*verify_cmd) return run_verify(scope, max_n, samples, seed, as_json);
        if (*ng_cmd) return run_ng(input, as_json);
        if (*gen_cmd) return run_gen(kind, n, output);
    } catch (const avec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
