#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "radmax/constructions.hpp"
#include "radmax/eccentricity.hpp"
#include "radmax/formats.hpp"
#include "radmax/graph.hpp"
#include "radmax/maximality.hpp"
#include "radmax/search.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;      // claim holds / construction succeeded
constexpr int kRefuted = 1; // claim refuted / graph not radially maximal
constexpr int kUsage = 2;   // usage, infeasibility, or malformed input

// Positional inputs may be a file path, "-" for stdin, or a literal graph.
std::string slurp_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open input file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

radmax::GraphFormat format_from_name(const std::string& name) {
    if (name == "graph6" || name == "g6") return radmax::GraphFormat::kGraph6;
    if (name == "dot") return radmax::GraphFormat::kDot;
    if (name == "edgelist" || name == "el") return radmax::GraphFormat::kEdgeList;
    throw std::invalid_argument("unknown graph format: " + name +
                                " (expected graph6, dot, or edgelist)");
}

radmax::Graph parse_with_optional_format(const std::string& text, const std::string& fmt) {
    if (fmt.empty()) return radmax::parse_graph_auto(text);
    return radmax::parse_graph(text, format_from_name(fmt));
}

void write_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << '\n';
}

std::optional<int> env_order_cap() {
    const char* raw = std::getenv("RADMAX_MAX_ORDER");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    try {
        std::size_t pos = 0;
        const int value = std::stoi(raw, &pos);
        if (pos != std::string(raw).size() || value < 1)
            throw std::invalid_argument("not a positive integer");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("RADMAX_MAX_ORDER must be a positive integer, got \"") +
                                    raw + "\"");
    }
}

struct ConstructArgs {
    int radius = 0;
    int diameter = -1;
    int order = -1;
    std::string format = "graph6";
    std::string out_path;
    std::string sidecar_path;
};

int run_construct(const ConstructArgs& args) {
    radmax::ConstructionParams params;
    params.radius = args.radius;
    params.diameter = args.diameter >= 0 ? args.diameter : args.radius;
    // default order: the family's minimum for the requested radius/diameter
    params.order = args.order >= 0 ? args.order
                                   : (params.diameter == params.radius ? 2 * params.radius
                                                                       : 3 * params.radius - 1);
    const radmax::LabeledConstruction built = radmax::build_radially_maximal(params);
    const auto fmt = format_from_name(args.format);

    std::string payload;
    if (fmt == radmax::GraphFormat::kDot) {
        payload = radmax::to_dot(built.graph, &built.labels);
    } else {
        payload = radmax::format_graph(built.graph, fmt);
    }
    write_payload(payload, args.out_path);

    std::string sidecar = args.sidecar_path;
    if (sidecar.empty() && !args.out_path.empty()) sidecar = args.out_path + ".json";
    if (!sidecar.empty()) {
        const auto profile = radmax::eccentricity_profile(built.graph);
        json j;
        j["order"] = built.graph.order();
        j["radius"] = profile.radius;
        j["diameter"] = profile.diameter;
        j["labels"] = json::object();
        for (const auto& [name, id] : built.labels) j["labels"][name] = id;
        std::ofstream out(sidecar, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open sidecar file: " + sidecar);
        out << j.dump(2) << '\n';
    }
    return kOk;
}

struct VerifyArgs {
    std::string input = "-";
    std::string format;
    bool certificate = false;
};

int run_verify(const VerifyArgs& args) {
    const radmax::Graph g = parse_with_optional_format(slurp_input(args.input), args.format);
    const auto profile = radmax::eccentricity_profile(g);
    if (!profile.connected) {
        std::cerr << "radmax verify: graph is disconnected; eccentricities are undefined, "
                     "so radial maximality does not apply\n";
        return kUsage;
    }

    json j;
    j["order"] = g.order();
    j["radius"] = profile.radius;
    j["diameter"] = profile.diameter;

    bool maximal = true;
    if (args.certificate && !g.is_complete()) {
        try {
            const radmax::MaximalityCertificate cert = radmax::certificate(g);
            json entries = json::array();
            for (const auto& e : cert.entries)
                entries.push_back({{"non_edge", {e.non_edge.first, e.non_edge.second}},
                                   {"witness", e.witness},
                                   {"new_ecc", e.new_ecc}});
            j["certificate"] = {{"radius", cert.radius}, {"entries", entries}};
        } catch (const radmax::NotRadiallyMaximalError& e) {
            maximal = false;
            j["counterexample_non_edge"] = {e.non_edge().first, e.non_edge().second};
            std::cerr << "radmax verify: " << e.what() << '\n';
        }
    } else {
        maximal = radmax::is_radially_maximal(g);
        if (!maximal && !g.is_complete()) {
            // name one offending pair for the diagnostic
            for (const auto& [u, v] : g.non_edges()) {
                const auto p2 = radmax::eccentricity_profile(g.plus_edge(u, v));
                if (p2.radius >= profile.radius) {
                    j["counterexample_non_edge"] = {u, v};
                    std::cerr << "radmax verify: adding edge (" << u << ", " << v
                              << ") keeps the radius at " << p2.radius << '\n';
                    break;
                }
            }
        }
        if (!maximal && g.is_complete())
            std::cerr << "radmax verify: complete graphs have no edge to add\n";
    }
    j["radially_maximal"] = maximal;
    std::cout << j.dump(2) << '\n';
    return maximal ? kOk : kRefuted;
}

struct SearchArgs {
    int order = 0;
    int min_order = 1;
    int radius = -1;
    int shards = 1;
    int shard = -1;
    int threads = 1;
    int witness_cap = 8;
};

int run_search(const SearchArgs& args) {
    radmax::SearchOptions opts;
    opts.shards = args.shards;
    opts.shard = args.shard;
    opts.threads = args.threads;
    opts.witness_cap = args.witness_cap;
    if (const auto cap = env_order_cap()) opts.order_cap = *cap;

    radmax::SearchReport report;
    if (args.radius >= 0) {
        report = radmax::min_order_nonselfcentered(args.radius, args.order, opts);
    } else {
        for (int n = std::max(1, args.min_order); n <= args.order; ++n)
            report.merge(radmax::check_bound_all(n, opts));
    }
    std::cout << radmax::to_json(report, 2) << '\n';

    bool refuted = !report.violations.empty();
    if (args.radius >= 0) {
        // a non-self-centered example below the 3r-1 floor refutes the minimum-order claim
        const int floor = 3 * args.radius - 1;
        for (const auto& stats : report.per_order) {
            const auto it = stats.non_self_centered_by_radius.find(args.radius);
            if (stats.order < floor && it != stats.non_self_centered_by_radius.end() &&
                it->second > 0)
                refuted = true;
        }
    }
    if (refuted) std::cerr << "radmax search: tested claim refuted; see report\n";
    return refuted ? kRefuted : kOk;
}

struct ConvertArgs {
    std::string input = "-";
    std::string from;
    std::string to = "graph6";
    std::string out_path;
};

int run_convert(const ConvertArgs& args) {
    const radmax::Graph g = parse_with_optional_format(slurp_input(args.input), args.from);
    write_payload(radmax::format_graph(g, format_from_name(args.to)), args.out_path);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radmax: build, verify, and exhaustively search radially maximal graphs"};
    app.require_subcommand(1);

    ConstructArgs cons;
    auto* construct = app.add_subcommand(
        "construct", "Build a radially maximal graph with the given radius/diameter/order");
    construct->add_option("-r,--radius", cons.radius, "target radius (>= 2)")->required();
    construct->add_option("-d,--diameter", cons.diameter,
                          "target diameter (default: equal to the radius)");
    construct->add_option("-n,--order", cons.order,
                          "number of vertices (default: smallest supported)");
    construct->add_option("-f,--format", cons.format, "output format: graph6, dot, edgelist")
        ->capture_default_str();
    construct->add_option("-o,--output", cons.out_path,
                          "write the graph here instead of stdout; label map goes to FILE.json");
    construct->add_option("--sidecar", cons.sidecar_path,
                          "write the JSON label map to this path (stdout mode keeps it off "
                          "unless asked, so pipes stay clean)");

    VerifyArgs ver;
    auto* verify =
        app.add_subcommand("verify", "Decide whether a graph is radially maximal");
    verify->add_option("input", ver.input,
                       "graph6/dot/edgelist text, a file path, or - for stdin")
        ->capture_default_str();
    verify->add_option("-f,--format", ver.format, "force the input format instead of sniffing");
    verify->add_flag("-c,--certificate", ver.certificate,
                     "emit the per-non-edge witness certificate as JSON");

    SearchArgs sea;
    auto* search = app.add_subcommand(
        "search", "Enumerate all labeled graphs up to an order and test the radius/diameter "
                  "bounds, or count non-self-centered examples of a fixed radius");
    search->add_option("-n,--order", sea.order, "largest order to enumerate")->required();
    search->add_option("--min-order", sea.min_order, "smallest order to enumerate")
        ->capture_default_str();
    search->add_option("-r,--radius", sea.radius,
                       "count non-self-centered radially maximal graphs of this radius");
    search->add_option("--shards", sea.shards, "split each order into this many mask ranges")
        ->capture_default_str();
    search->add_option("--shard", sea.shard, "run only this shard index (for split runs)");
    search->add_option("--threads", sea.threads, "worker threads")->capture_default_str();
    search->add_option("--witness-cap", sea.witness_cap, "max stored example graphs")
        ->capture_default_str();

    ConvertArgs conv;
    auto* convert = app.add_subcommand("convert", "Convert between graph6, DOT, and edge lists");
    convert->add_option("input", conv.input,
                        "graph6/dot/edgelist text, a file path, or - for stdin")
        ->capture_default_str();
    convert->add_option("--from", conv.from, "input format (default: sniffed)");
    convert->add_option("--to", conv.to, "output format: graph6, dot, edgelist")
        ->capture_default_str();
    convert->add_option("-o,--output", conv.out_path, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "radmax: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (construct->parsed()) return run_construct(cons);
        if (verify->parsed()) return run_verify(ver);
        if (search->parsed()) return run_search(sea);
        if (convert->parsed()) return run_convert(conv);
    } catch (const radmax::InfeasibleError& e) {
        std::cerr << "radmax: infeasible: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "radmax: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
