#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "recol/graph.hpp"

namespace recol {

// ---------------------------------------------------------------------------
// Round accounting. Distributed algorithms are composed of phases; each phase
// is either a node program executed by the runner below or a leader-local
// computation over a gathered view, charged its gather radius.

struct PhaseLog {
    std::string name;
    long long rounds = 0;
};

struct RoundLedger {
    std::vector<PhaseLog> phases;

    void charge(const std::string& name, long long rounds) { phases.push_back({name, rounds}); }
    long long total() const {
        long long t = 0;
        for (const auto& p : phases) t += p.rounds;
        return t;
    }
};

// ---------------------------------------------------------------------------
// Node programs. One synchronous round consists of: every live node emits a
// broadcast via message(), all messages are delivered to neighbors, then each
// live node folds its inbox with update() and may halt. A halted node's final
// broadcast stays visible to neighbors, and its output never changes.
//
// struct Program {
//   using Input;  using State;  using Message;  using Output;
//   static State init(Vertex v, const Input&);
//   static Message message(const State&);
//   static bool update(State&, int round, const std::vector<const Message*>& inbox);
//   static Output output(const State&);
// };

template <class P>
concept NodeProgramType = requires(typename P::State st, const typename P::Input& in,
                                   const std::vector<const typename P::Message*>& inbox) {
    { P::init(Vertex{0}, in) } -> std::same_as<typename P::State>;
    { P::message(st) } -> std::same_as<typename P::Message>;
    { P::update(st, 1, inbox) } -> std::same_as<bool>;
    { P::output(st) } -> std::same_as<typename P::Output>;
};

template <class Output>
struct Transcript {
    std::vector<Output> outputs;
    long long rounds_used = 0;
    std::vector<int> live_per_round;  // per-round count of not-yet-halted nodes
};

/// Synchronous deterministic reference execution; nodes step in id order
/// within a round, which is observation-equivalent to any parallel order.
template <class P>
    requires NodeProgramType<P>
Transcript<typename P::Output> run_program(const Adjacency& adj,
                                           const std::vector<typename P::Input>& inputs,
                                           int max_rounds) {
    const int n = static_cast<int>(adj.size());
    if (static_cast<int>(inputs.size()) != n)
        throw ContractError("run_program: one input per node required");

    std::vector<typename P::State> state;
    state.reserve(n);
    for (Vertex v = 0; v < n; ++v) state.push_back(P::init(v, inputs[v]));

    std::vector<typename P::Message> outbox(n);
    std::vector<char> live(n, 1);
    int live_count = n;

    Transcript<typename P::Output> tr;
    tr.outputs.resize(n);

    for (int round = 1; live_count > 0; ++round) {
        if (round > max_rounds) {
            std::vector<Vertex> pending;
            for (Vertex v = 0; v < n; ++v)
                if (live[v]) pending.push_back(v);
            throw BudgetError("run_program: round budget " + std::to_string(max_rounds) +
                                  " exhausted with " + std::to_string(pending.size()) +
                                  " nodes still running",
                              pending);
        }
        tr.live_per_round.push_back(live_count);
        for (Vertex v = 0; v < n; ++v)
            if (live[v]) outbox[v] = P::message(state[v]);
        std::vector<const typename P::Message*> inbox;
        for (Vertex v = 0; v < n; ++v) {
            if (!live[v]) continue;
            inbox.clear();
            inbox.reserve(adj[v].size());
            for (Vertex w : adj[v]) inbox.push_back(&outbox[w]);
            if (P::update(state[v], round, inbox)) {
                live[v] = 0;
                --live_count;
                tr.outputs[v] = P::output(state[v]);
                outbox[v] = P::message(state[v]);  // frozen final broadcast
                tr.rounds_used = round;
            }
        }
    }
    return tr;
}

// ---------------------------------------------------------------------------
// Views. A leader phase computes from exactly the radius-r ball it gathered;
// functions taking a View cannot see anything else.

struct View {
    Vertex center = -1;
    int radius = 0;
    std::vector<Vertex> vertices;  // global ids, sorted ascending
    std::vector<int> dist;         // aligned with vertices, distance from center
    Adjacency local_adj;           // induced subgraph on local indices
    std::unordered_map<Vertex, int> local_of;

    bool contains(Vertex global) const { return local_of.count(global) > 0; }
    int local(Vertex global) const { return local_of.at(global); }
    Vertex global(int local_id) const { return vertices[local_id]; }
    int n() const { return static_cast<int>(vertices.size()); }
};

/// Exact radius-r ball around v with induced adjacency.
View gather_view(const Adjacency& adj, Vertex v, int radius);

/// Transcript export for integer-valued outputs: rounds used, per-node
/// outputs, and the per-round live counts.
template <class Output>
std::string transcript_to_json(const Transcript<Output>& tr) {
    std::string out = "{\"live_per_round\":[";
    for (size_t i = 0; i < tr.live_per_round.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(tr.live_per_round[i]);
    }
    out += "],\"outputs\":[";
    for (size_t i = 0; i < tr.outputs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(static_cast<long long>(tr.outputs[i]));
    }
    out += "],\"rounds_used\":" + std::to_string(tr.rounds_used) + "}";
    return out;
}

/// Deterministic id permutation per seed (identity for seed 0); used to expose
/// id-dependence bugs by relabeling before a run.
std::vector<int> permuted_ids(int n, uint64_t seed);

}  // namespace recol
