#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "recol/chordal.hpp"
#include "recol/chordal_recolor.hpp"
#include "recol/color.hpp"
#include "recol/gen.hpp"
#include "recol/io.hpp"
#include "recol/oracle.hpp"
#include "recol/recolor.hpp"

using namespace recol;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ContractError("cannot open output file: " + path);
    out << text << "\n";
}

Config config_for(const std::string& mode, long long scaled_n, long long scaled_width) {
    if (mode == "faithful") return {};
    return Config::scaled(scaled_n, scaled_width);
}

struct ComponentRun {
    Coloring coloring;
    long long rounds = 0;
};

void dump_trace(const RoundLedger& ledger) {
    json phases = json::array();
    for (const auto& p : ledger.phases) phases.push_back({{"phase", p.name}, {"rounds", p.rounds}});
    std::cerr << json({{"total_rounds", ledger.total()}, {"phases", phases}}).dump() << "\n";
}

// Colors a possibly disconnected graph component by component.
ComponentRun color_any(const AnyGraph& any, const Config& cfg, uint64_t seed, bool trace) {
    ComponentRun out;
    if (std::holds_alternative<IntervalGraph>(any)) {
        const auto& g = std::get<IntervalGraph>(any);
        out.coloring = Coloring(std::vector<int>(g.n(), -1), 1);
        for (const auto& comp : split_components(g)) {
            RoundLedger ledger;
            auto c = interval_color(comp.graph, cfg, &ledger, seed);
            out.coloring.palette = std::max(out.coloring.palette, c.palette);
            for (Vertex lv = 0; lv < comp.graph.n(); ++lv)
                out.coloring[comp.to_global[lv]] = c[lv];
            out.rounds = std::max(out.rounds, ledger.total());
            if (trace) dump_trace(ledger);
        }
    } else {
        const auto& g = std::get<ChordalGraph>(any);
        out.coloring = Coloring(std::vector<int>(g.n(), -1), 1);
        for (const auto& comp : split_components(g)) {
            RoundLedger ledger;
            int omega = max_clique_size(comp.graph);
            long long width = color_width_for(omega);
            auto dec = interval_decomposition(comp.graph, width, &ledger);
            auto cfg2 = Config::scaled(-1, width);
            auto c = chordal_color(comp.graph, dec, cfg2, &ledger);
            out.coloring.palette = std::max(out.coloring.palette, c.palette);
            for (Vertex lv = 0; lv < comp.graph.n(); ++lv)
                out.coloring[comp.to_global[lv]] = c[lv];
            out.rounds = std::max(out.rounds, ledger.total());
            if (trace) dump_trace(ledger);
        }
    }
    return out;
}

json box_decomposition_json(const IntervalGraph& g, const BoxDecomposition& bd) {
    (void)g;
    json j;
    j["ruling"] = bd.ruling;
    j["boxes"] = bd.boxes;
    j["interboxes"] = bd.interboxes;
    j["interbox_left"] = bd.interbox_left;
    j["interbox_right"] = bd.interbox_right;
    return j;
}

std::string boxes_to_dot(const IntervalGraph& g, const BoxDecomposition& bd) {
    std::ostringstream os;
    os << "graph boxes {\n  node [style=filled];\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        const char* fill = bd.box_of[v] >= 0 ? "gray70" : "white";
        os << "  v" << v << " [fillcolor=" << fill << "];\n";
    }
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v))
            if (w > v) os << "  v" << v << " -- v" << w << ";\n";
    os << "}\n";
    return os.str();
}

std::string layers_to_dot(const ChordalGraph& g, const IntervalDecomposition& dec) {
    static const char* palette[] = {"white",     "gray90",    "gray75",  "gray60",
                                    "lightblue", "lightpink", "khaki",   "palegreen",
                                    "orange",    "plum",      "skyblue", "tan"};
    auto t = clique_tree(g);
    std::ostringstream os;
    os << "graph layers {\n  node [shape=box,style=filled];\n";
    for (int i = 0; i < t.size(); ++i) {
        int deepest = 0;
        os << "  b" << i << " [label=\"{";
        for (size_t x = 0; x < t.bags[i].size(); ++x) {
            if (x) os << ",";
            os << t.bags[i][x];
            deepest = std::max(deepest, dec.layer_of[t.bags[i][x]]);
        }
        os << "}\",fillcolor=" << palette[deepest % 12] << "];\n";
    }
    for (auto [a, b] : t.edges) os << "  b" << a << " -- b" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distributed coloring and recoloring of interval and chordal graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 0;
    int n = 50, omega = 3, colors = 0, extra = 0;
    long long scaled_n = -1, width = -1;
    std::string mode = "faithful", format = "json";
    std::string in_path, out_path, alpha_path, beta_path, sched_path;
    long long max_rounds = 1'000'000;

    app.add_option("--seed", seed, "deterministic seed");
    app.add_option("--n", n, "vertex count for generators");
    app.add_option("--omega", omega, "clique number parameter");
    app.add_option("--colors", colors, "palette size k");
    app.add_option("--extra", extra, "extra colors beyond k");
    app.add_option("--mode", mode, "faithful|scaled")
        ->check(CLI::IsMember({"faithful", "scaled"}));
    app.add_option("--format", format, "json|dot|csv")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    app.add_option("--in", in_path, "input file (- for stdin)");
    app.add_option("--out", out_path, "output file (- for stdout)");
    app.add_option("--alpha", alpha_path, "start coloring JSON file");
    app.add_option("--beta", beta_path, "target coloring JSON file");
    app.add_option("--schedule", sched_path, "schedule JSON file");
    app.add_option("--max-rounds", max_rounds, "round budget for simulations");
    app.add_option("--scaled-n", scaled_n, "scaled-mode run length N");
    app.add_option("--width", width, "decomposition width D");
    bool trace = false;
    app.add_flag("--trace", trace, "dump the per-phase round ledger to stderr");

    auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
    bool gen_power = false, gen_rand_interval = false, gen_rand_chordal = false;
    int spread = 6;
    gen_cmd->add_flag("--power-path", gen_power, "power of a path");
    gen_cmd->add_flag("--random-interval", gen_rand_interval, "random interval graph");
    gen_cmd->add_flag("--random-chordal", gen_rand_chordal, "random chordal graph");
    gen_cmd->add_option("--spread", spread, "interval generator spread");

    auto* color_cmd = app.add_subcommand("color", "color a graph");
    auto* recolor_cmd = app.add_subcommand("recolor", "emit a recoloring schedule");
    auto* decomp_cmd = app.add_subcommand("decompose", "box or interval decomposition");
    auto* validate_cmd = app.add_subcommand("validate", "check a schedule");
    auto* oracle_cmd = app.add_subcommand("oracle", "exact reachability on small graphs");
    std::string model = "independent-set";
    oracle_cmd->add_option("--model", model, "single-vertex|independent-set")
        ->check(CLI::IsMember({"single-vertex", "independent-set"}));
    auto* bench_cmd = app.add_subcommand("bench", "benchmark rounds and lengths, CSV output");
    std::string bench_kind = "interval-color";
    std::string n_list = "1000,10000,100000";
    bench_cmd->add_option("--kind", bench_kind, "interval-color|chordal-color|recolor")
        ->check(CLI::IsMember({"interval-color", "chordal-color", "recolor"}));
    bench_cmd->add_option("--n-list", n_list, "comma separated sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Config cfg = config_for(mode, scaled_n, width);

        if (gen_cmd->parsed()) {
            if (gen_power + gen_rand_interval + gen_rand_chordal != 1)
                throw ContractError("gen: pick exactly one of --power-path, --random-interval, "
                                    "--random-chordal");
            std::string text;
            if (gen_power) {
                text = graph_to_json(gen_power_path(n, omega));
            } else if (gen_rand_interval) {
                text = graph_to_json(gen_random_interval(n, seed, spread));
            } else {
                text = graph_to_json(gen_random_chordal(n, seed, omega));
            }
            if (format == "dot") {
                auto any = graph_from_json(text);
                text = graph_to_dot(adjacency_of(any));
            }
            write_output(out_path, text);
            return 0;
        }

        if (color_cmd->parsed()) {
            auto any = graph_from_json(read_input(in_path));
            auto run = color_any(any, cfg, seed, trace);
            if (run.rounds > max_rounds)
                throw BudgetError("color: used " + std::to_string(run.rounds) +
                                  " rounds, over the --max-rounds budget of " +
                                  std::to_string(max_rounds));
            const auto& adj = adjacency_of(any);
            if (!run.coloring.proper(adj)) throw ContractError("color: produced improper coloring");
            json j = json::parse(coloring_to_json(run.coloring));
            j["rounds"] = run.rounds;
            write_output(out_path, j.dump());
            return 0;
        }

        if (recolor_cmd->parsed()) {
            auto any = graph_from_json(read_input(in_path));
            auto alpha = coloring_from_json(read_input(alpha_path));
            auto beta = coloring_from_json(read_input(beta_path));
            int k = colors > 0 ? colors : alpha.palette;
            Schedule total{k, extra, {}};
            if (std::holds_alternative<IntervalGraph>(any)) {
                const auto& g = std::get<IntervalGraph>(any);
                for (const auto& comp : split_components(g)) {
                    Coloring a(std::vector<int>(comp.graph.n(), 0), k);
                    Coloring b = a;
                    for (Vertex lv = 0; lv < comp.graph.n(); ++lv) {
                        a[lv] = alpha[comp.to_global[lv]];
                        b[lv] = beta[comp.to_global[lv]];
                    }
                    int use_extra = extra > 0 || recolor_cmd->count("--extra")
                                        ? extra
                                        : branch_extra_budget(k, max_clique_size(comp.graph));
                    auto s = interval_recolor(comp.graph, a, b, k, use_extra, cfg, nullptr, seed);
                    total.extra = std::max(total.extra, s.extra);
                    for (const Step& st : s.steps) {
                        Step mapped;
                        for (auto [lv, c] : st) mapped.push_back({comp.to_global[lv], c});
                        total.push(std::move(mapped));
                    }
                }
            } else {
                const auto& g = std::get<ChordalGraph>(any);
                for (const auto& comp : split_components(g)) {
                    Coloring a(std::vector<int>(comp.graph.n(), 0), k);
                    Coloring b = a;
                    for (Vertex lv = 0; lv < comp.graph.n(); ++lv) {
                        a[lv] = alpha[comp.to_global[lv]];
                        b[lv] = beta[comp.to_global[lv]];
                    }
                    long long w = width > 0 ? width : 20;
                    auto dec = interval_decomposition(comp.graph, w);
                    int use_extra = std::max(extra, 1);
                    auto s = chordal_recolor(comp.graph, dec, a, b, k, use_extra, cfg, nullptr,
                                             seed);
                    total.extra = std::max(total.extra, s.extra);
                    for (const Step& st : s.steps) {
                        Step mapped;
                        for (auto [lv, c] : st) mapped.push_back({comp.to_global[lv], c});
                        total.push(std::move(mapped));
                    }
                }
            }
            write_output(out_path, schedule_to_json(total));
            return 0;
        }

        if (decomp_cmd->parsed()) {
            auto any = graph_from_json(read_input(in_path));
            if (std::holds_alternative<IntervalGraph>(any)) {
                const auto& g = std::get<IntervalGraph>(any);
                json comps = json::array();
                std::string dot;
                for (const auto& comp : split_components(g)) {
                    auto bd = box_decomposition(comp.graph,
                                                ruling_set_4_5(comp.graph, nullptr, seed));
                    if (format == "dot") {
                        dot += boxes_to_dot(comp.graph, bd);
                        continue;
                    }
                    json c = box_decomposition_json(comp.graph, bd);
                    c["vertices"] = comp.to_global;
                    comps.push_back(std::move(c));
                }
                write_output(out_path,
                             format == "dot" ? dot : json({{"components", comps}}).dump());
            } else {
                const auto& g = std::get<ChordalGraph>(any);
                long long w = width > 0 ? width : 20;
                json comps = json::array();
                std::string dot;
                for (const auto& comp : split_components(g)) {
                    auto dec = interval_decomposition(comp.graph, w);
                    if (format == "dot") {
                        dot += layers_to_dot(comp.graph, dec);
                        continue;
                    }
                    json j;
                    j["vertices"] = comp.to_global;
                    j["width"] = dec.width;
                    j["layers"] = dec.layers;
                    json kinds = json::array();
                    for (int i = 0; i < dec.depth(); ++i) {
                        json row = json::array();
                        for (const auto& cm : layer_components(comp.graph, dec, i))
                            row.push_back(
                                classify_component(comp.graph, dec, i, cm).pending ? "pending"
                                                                                   : "separator");
                        kinds.push_back(row);
                    }
                    j["component_kinds"] = kinds;
                    comps.push_back(std::move(j));
                }
                write_output(out_path,
                             format == "dot" ? dot : json({{"components", comps}}).dump());
            }
            return 0;
        }

        if (validate_cmd->parsed()) {
            auto any = graph_from_json(read_input(in_path));
            auto alpha = coloring_from_json(read_input(alpha_path));
            auto sched = schedule_from_json(read_input(sched_path));
            Coloring beta;
            bool has_beta = !beta_path.empty();
            if (has_beta) beta = coloring_from_json(read_input(beta_path));
            auto rep = validate(adjacency_of(any), alpha, sched, has_beta ? &beta : nullptr);
            if (rep.ok) {
                std::cout << "accepted\n";
                return 0;
            }
            std::cerr << "rejected at step " << rep.step << ": " << rep.reason << " (vertices";
            for (Vertex v : rep.vertices) std::cerr << " " << v;
            std::cerr << ")\n";
            return 1;
        }

        if (oracle_cmd->parsed()) {
            auto any = graph_from_json(read_input(in_path));
            auto alpha = coloring_from_json(read_input(alpha_path));
            auto beta = coloring_from_json(read_input(beta_path));
            int k = colors > 0 ? colors : alpha.palette;
            auto sm = model == "single-vertex" ? StepModel::SingleVertex
                                               : StepModel::IndependentSet;
            auto res = bfs_reachability(adjacency_of(any), alpha, beta, k, sm);
            json j;
            j["reachable"] = res.reachable;
            j["states_explored"] = res.states_explored;
            if (res.reachable) j["witness"] = json::parse(schedule_to_json(res.witness));
            write_output(out_path, j.dump());
            return 0;
        }

        if (bench_cmd->parsed()) {
            std::ostringstream csv;
            csv << "n,omega,delta,k,rounds,schedule_length,wall_ms\n";
            std::vector<long long> sizes;
            std::stringstream ss(n_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(std::stoll(tok));
            for (long long size : sizes) {
                auto t0 = std::chrono::steady_clock::now();
                long long rounds = 0, sched_len = 0;
                int delta = 0, k_used = colors;
                if (bench_kind == "interval-color") {
                    auto g = gen_power_path(static_cast<int>(size), omega);
                    delta = g.max_degree();
                    RoundLedger ledger;
                    auto c = interval_color(g, cfg, &ledger, seed);
                    if (!c.proper(g.adj())) throw ContractError("bench: improper coloring");
                    rounds = ledger.total();
                    k_used = c.palette;
                } else if (bench_kind == "chordal-color") {
                    auto g0 = gen_random_chordal(static_cast<int>(size), seed, omega);
                    auto comps = split_components(g0);
                    size_t big = 0;
                    for (size_t i = 1; i < comps.size(); ++i)
                        if (comps[i].graph.n() > comps[big].graph.n()) big = i;
                    const auto& g = comps[big].graph;
                    delta = g.max_degree();
                    int om = max_clique_size(g);
                    RoundLedger ledger;
                    long long w = width > 0 ? width : color_width_for(om);
                    auto dec = interval_decomposition(g, w, &ledger);
                    auto c = chordal_color(g, dec, Config::scaled(-1, w), &ledger);
                    if (!c.proper(g.adj())) throw ContractError("bench: improper coloring");
                    rounds = ledger.total();
                    k_used = c.palette;
                } else {
                    auto g = gen_power_path(static_cast<int>(size), omega);
                    delta = g.max_degree();
                    int k = colors > 0 ? colors : max_clique_size(g) + 3;
                    auto a = gen_random_coloring(g.adj(), k, seed + 1);
                    auto b = gen_random_coloring(g.adj(), k, seed + 2);
                    RoundLedger ledger;
                    auto s = interval_recolor(g, a, b, k,
                                              branch_extra_budget(k, max_clique_size(g)), cfg,
                                              &ledger, seed);
                    auto rep = validate(g.adj(), a, s, &b);
                    if (!rep.ok) throw ContractError("bench: invalid schedule: " + rep.reason);
                    rounds = ledger.total();
                    sched_len = s.length();
                    k_used = k;
                }
                auto t1 = std::chrono::steady_clock::now();
                auto ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                csv << size << "," << omega << "," << delta << "," << k_used << "," << rounds
                    << "," << sched_len << "," << ms << "\n";
            }
            write_output(out_path, csv.str());
            return 0;
        }
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::string(e.what()).find("JSON parse error") != std::string::npos ? 2 : 1;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
