#include "recol/programs.hpp"

#include <algorithm>
#include <queue>

namespace recol {

// BallCollect ---------------------------------------------------------------

BallCollect::State BallCollect::init(Vertex v, const Input& in) {
    State st;
    st.self = v;
    st.radius = in.radius;
    st.known[v] = in.neighbors;
    return st;
}

BallCollect::Message BallCollect::message(const State& st) { return st.known; }

bool BallCollect::update(State& st, int round, const std::vector<const Message*>& inbox) {
    for (const auto* m : inbox)
        for (const auto& [u, nbrs] : *m) st.known.emplace(u, nbrs);
    return round >= st.radius;
}

BallCollect::Output BallCollect::output(const State& st) {
    // Distances inside the known graph, then prune to the radius ball.
    std::map<Vertex, int> dist;
    dist[st.self] = 0;
    std::queue<Vertex> q;
    q.push(st.self);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        auto it = st.known.find(u);
        if (it == st.known.end() || dist[u] >= st.radius) continue;
        for (Vertex w : it->second)
            if (!dist.count(w)) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    Output out;
    for (const auto& [u, d] : dist)
        if (d <= st.radius) out.vertices.push_back(u);
    std::sort(out.vertices.begin(), out.vertices.end());
    std::map<Vertex, int> local;
    for (size_t i = 0; i < out.vertices.size(); ++i) local[out.vertices[i]] = static_cast<int>(i);
    out.local_adj.assign(out.vertices.size(), {});
    for (size_t i = 0; i < out.vertices.size(); ++i) {
        auto it = st.known.find(out.vertices[i]);
        if (it == st.known.end()) continue;
        for (Vertex w : it->second) {
            auto lw = local.find(w);
            if (lw != local.end()) out.local_adj[i].push_back(lw->second);
        }
    }
    for (auto& a : out.local_adj) std::sort(a.begin(), a.end());
    return out;
}

// ColeVishkin ---------------------------------------------------------------

int ColeVishkin::cv_iterations(int id_bits) {
    // Bit width shrinks as b -> ceil(log2(b)) + 1 per iteration; stop at 3
    // bits (colors < 6), plus one settling iteration.
    int b = std::max(id_bits, 3);
    int iters = 0;
    while (b > 3) {
        int nb = 1;
        while ((1 << nb) < b) ++nb;
        b = nb + 1;
        ++iters;
    }
    return iters + 1;
}

ColeVishkin::State ColeVishkin::init(Vertex v, const Input& in) {
    State st;
    st.self = v;
    st.succ = in.succ;
    st.pred = in.pred;
    st.color = in.id;
    st.cv_rounds = cv_iterations(in.id_bits);
    st.total_rounds = st.cv_rounds + 3;
    return st;
}

ColeVishkin::Message ColeVishkin::message(const State& st) { return {st.self, st.color}; }

bool ColeVishkin::update(State& st, int round, const std::vector<const Message*>& inbox) {
    uint64_t succ_color = st.color ^ 1;  // virtual successor at a path end
    uint64_t pred_color = 0;
    bool have_pred = false, have_succ = false;
    for (const auto* m : inbox) {
        if (m->from == st.succ) {
            succ_color = m->color;
            have_succ = true;
        }
        if (m->from == st.pred) {
            pred_color = m->color;
            have_pred = true;
        }
    }
    if (round <= st.cv_rounds) {
        uint64_t diff = st.color ^ succ_color;
        int i = diff ? __builtin_ctzll(diff) : 0;
        st.color = 2ULL * i + ((st.color >> i) & 1);
    } else {
        // rounds cv+1..cv+3 eliminate colors 5, 4, 3
        uint64_t target = 5 - (round - st.cv_rounds - 1);
        if (st.color == target) {
            for (uint64_t c = 0; c < 3; ++c) {
                if (have_succ && c == succ_color) continue;
                if (have_pred && c == pred_color) continue;
                st.color = c;
                break;
            }
        }
    }
    return round >= st.total_rounds;
}

// Linial --------------------------------------------------------------------

namespace {

bool is_prime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

long long next_prime(long long x) {
    while (!is_prime(x)) ++x;
    return x;
}

long long iroot(long long m, int k) {
    // smallest r with r^k >= m
    long long r = 1;
    while (true) {
        long long p = 1;
        bool ge = false;
        for (int i = 0; i < k; ++i) {
            p *= r;
            if (p >= m) {
                ge = true;
                break;
            }
        }
        if (ge || p >= m) return r;
        ++r;
    }
}

}  // namespace

std::vector<LinialStage> linial_schedule(long long m0, int delta) {
    std::vector<LinialStage> stages;
    long long m = m0;
    while (true) {
        long long best_next = m;
        LinialStage best{};
        for (int d = 1; d <= 6; ++d) {
            long long q = next_prime(std::max<long long>(iroot(m, d + 1),
                                                         static_cast<long long>(d) * delta + 1));
            long long next = q * q;
            if (next < best_next) {
                best_next = next;
                best = {m, d, q};
            }
        }
        if (best_next >= m) break;
        stages.push_back(best);
        m = best_next;
    }
    return stages;
}

long long linial_final_palette(long long m0, int delta) {
    auto stages = linial_schedule(m0, delta);
    if (stages.empty()) return m0;
    long long q = stages.back().q;
    return q * q;
}

LinialReduce::State LinialReduce::init(Vertex, const Input& in) {
    State st;
    st.color = static_cast<long long>(in.id);
    st.stages = linial_schedule(1LL << in.id_bits, in.delta);
    st.stage = 0;
    return st;
}

bool LinialReduce::update(State& st, int round, const std::vector<const Message*>& inbox) {
    (void)round;
    if (st.stage >= st.stages.size()) return true;
    const auto& sg = st.stages[st.stage];
    const long long q = sg.q;
    const int d = sg.d;

    auto digits_of = [&](long long c) {
        std::vector<long long> digits(d + 1);
        for (int i = 0; i <= d; ++i) {
            digits[i] = c % q;
            c /= q;
        }
        return digits;
    };
    auto eval = [&](const std::vector<long long>& g, long long a) {
        long long acc = 0;
        for (int i = d; i >= 0; --i) acc = (acc * a + g[i]) % q;
        return acc;
    };

    auto mine = digits_of(st.color);
    std::vector<std::vector<long long>> others;
    others.reserve(inbox.size());
    for (const auto* m : inbox)
        if (m->color != st.color) others.push_back(digits_of(m->color));

    for (long long a = 0; a < q; ++a) {
        long long val = eval(mine, a);
        bool clash = false;
        for (const auto& g : others)
            if (eval(g, a) == val) {
                clash = true;
                break;
            }
        if (!clash) {
            st.color = a * q + val;
            break;
        }
    }
    ++st.stage;
    return st.stage >= st.stages.size();
}

// distributed_mis -----------------------------------------------------------

std::vector<char> distributed_mis(const Adjacency& adj, const std::vector<uint64_t>& ids,
                                  int delta, RoundLedger* ledger, const std::string& phase,
                                  long long multiplier) {
    int n = static_cast<int>(adj.size());
    uint64_t max_id = 0;
    for (uint64_t id : ids) max_id = std::max(max_id, id);
    int bits = 1;
    while ((1ULL << bits) <= max_id) ++bits;

    std::vector<LinialReduce::Input> lin_in(n);
    for (Vertex v = 0; v < n; ++v) lin_in[v] = {ids[v], bits, delta};
    auto lin = run_program<LinialReduce>(adj, lin_in, 4 * bits + 64);
    if (ledger) ledger->charge(phase + "/linial", lin.rounds_used * multiplier);

    long long palette = linial_final_palette(1LL << bits, delta);
    std::vector<ClassReduce::Input> cr_in(n);
    for (Vertex v = 0; v < n; ++v) {
        if (lin.outputs[v] < 0 || lin.outputs[v] >= palette)
            throw ContractError("distributed_mis: reduced color out of palette");
        cr_in[v] = {static_cast<int>(lin.outputs[v]), static_cast<int>(palette), delta};
    }
    auto cr = run_program<ClassReduce>(adj, cr_in, static_cast<int>(palette) + 2);
    if (ledger) ledger->charge(phase + "/class-reduce", cr.rounds_used * multiplier);

    std::vector<SweepMis::Input> sweep_in(n);
    for (Vertex v = 0; v < n; ++v) sweep_in[v] = {cr.outputs[v]};
    auto mis = run_program<SweepMis>(adj, sweep_in, delta + 4);
    if (ledger) ledger->charge(phase + "/sweep", mis.rounds_used * multiplier);

    std::vector<char> out(n, 0);
    for (Vertex v = 0; v < n; ++v) out[v] = mis.outputs[v] ? 1 : 0;
    return out;
}

}  // namespace recol
