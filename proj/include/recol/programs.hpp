#pragma once

// Node programs for the core symmetry-breaking steps: ball collection,
// Cole-Vishkin on oriented paths/cycles, Linial-style color reduction on
// bounded-degree graphs, and the color-class MIS sweep.

#include <cstdint>
#include <map>
#include <utility>

#include "recol/sim.hpp"

namespace recol {

// ---------------------------------------------------------------------------

/// Collects the exact radius-r ball by flooding neighbor lists.
struct BallCollect {
    struct Input {
        int radius = 0;
        std::vector<Vertex> neighbors;
    };
    struct State {
        Vertex self = -1;
        int radius = 0;
        std::map<Vertex, std::vector<Vertex>> known;
    };
    using Message = std::map<Vertex, std::vector<Vertex>>;
    struct Output {
        std::vector<Vertex> vertices;
        Adjacency local_adj;
        bool operator==(const Output&) const = default;
    };

    static State init(Vertex v, const Input& in);
    static Message message(const State& st);
    static bool update(State& st, int round, const std::vector<const Message*>& inbox);
    static Output output(const State& st);
};

// ---------------------------------------------------------------------------

/// Cole-Vishkin 3-coloring of an oriented path or cycle. Every node knows its
/// successor/predecessor vertex index (-1 at path ends) and the bit width of
/// the id space; the iteration count is a fixed function of that width, so
/// all nodes stay in lockstep.
struct ColeVishkin {
    struct Input {
        uint64_t id = 0;
        int id_bits = 0;
        Vertex succ = -1;
        Vertex pred = -1;
    };
    struct State {
        Vertex self = -1;
        Vertex succ = -1, pred = -1;
        uint64_t color = 0;
        int cv_rounds = 0;
        int total_rounds = 0;
    };
    struct Message {
        Vertex from = -1;
        uint64_t color = 0;
    };
    using Output = int;

    static int cv_iterations(int id_bits);
    static State init(Vertex v, const Input& in);
    static Message message(const State& st);
    static bool update(State& st, int round, const std::vector<const Message*>& inbox);
    static Output output(const State& st) { return static_cast<int>(st.color); }
};

// ---------------------------------------------------------------------------

/// One stage of Linial color reduction: colors < m_in become pairs
/// (a, g(a)) < q*q via degree-d polynomials over F_q.
struct LinialStage {
    long long m_in = 0;
    int d = 0;
    long long q = 0;
};

/// Deterministic stage schedule from the initial palette and degree bound;
/// empty when m0 is already at the fixpoint.
std::vector<LinialStage> linial_schedule(long long m0, int delta);
long long linial_final_palette(long long m0, int delta);

/// Linial-style color reduction on an arbitrary graph of max degree <= delta.
struct LinialReduce {
    struct Input {
        uint64_t id = 0;
        int id_bits = 0;
        int delta = 0;
    };
    struct State {
        long long color = 0;
        std::vector<LinialStage> stages;
        size_t stage = 0;
    };
    struct Message {
        long long color = 0;
    };
    using Output = long long;

    static State init(Vertex v, const Input& in);
    static Message message(const State& st) { return {st.color}; }
    static bool update(State& st, int round, const std::vector<const Message*>& inbox);
    static Output output(const State& st) { return st.color; }
};

// ---------------------------------------------------------------------------

/// Class-by-class palette compression: in round r the class palette-r picks
/// the smallest free color below delta+2. Brings any proper coloring down to
/// delta+2 colors in palette-delta-2 rounds, independent of n.
struct ClassReduce {
    struct Input {
        int color = 0;
        int palette = 0;
        int delta = 0;
    };
    struct State {
        int color = 0;
        int palette = 0;
        int delta = 0;
    };
    struct Message {
        int color = 0;
    };
    using Output = int;

    static State init(Vertex, const Input& in) { return {in.color, in.palette, in.delta}; }
    static Message message(const State& st) { return {st.color}; }
    static bool update(State& st, int round, const std::vector<const Message*>& inbox) {
        int floor_colors = st.delta + 2;
        if (st.color < floor_colors) return true;
        int acting_class = st.palette - round;
        if (st.color == acting_class) {
            std::vector<char> blocked(floor_colors, 0);
            for (const auto* m : inbox)
                if (m->color < floor_colors) blocked[m->color] = 1;
            for (int c = 0; c < floor_colors; ++c)
                if (!blocked[c]) {
                    st.color = c;
                    break;
                }
            return true;
        }
        return false;
    }
    static Output output(const State& st) { return st.color; }
};

/// Greedy MIS sweep over the classes of a proper coloring: class c joins in
/// round c+1 unless a neighbor already joined.
struct SweepMis {
    struct Input {
        int color = 0;
    };
    struct State {
        int color = 0;
        bool in_mis = false;
        bool blocked = false;
    };
    struct Message {
        bool in_mis = false;
    };
    using Output = bool;

    static State init(Vertex, const Input& in) { return {in.color, false, false}; }
    static Message message(const State& st) { return {st.in_mis}; }
    static bool update(State& st, int round, const std::vector<const Message*>& inbox) {
        for (const auto* m : inbox)
            if (m->in_mis) st.blocked = true;
        if (round == st.color + 1) {
            st.in_mis = !st.blocked;
            return true;
        }
        return false;
    }
    static Output output(const State& st) { return st.in_mis; }
};

// ---------------------------------------------------------------------------

/// Linial reduction followed by the class sweep; returns the MIS indicator.
/// `ids` are the unique identifiers seeding the reduction; `multiplier`
/// scales the charged rounds when the graph is a virtual structure whose
/// edges cost several real rounds each.
std::vector<char> distributed_mis(const Adjacency& adj, const std::vector<uint64_t>& ids,
                                  int delta, RoundLedger* ledger, const std::string& phase,
                                  long long multiplier = 1);

}  // namespace recol
