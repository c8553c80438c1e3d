#include "recol/schedule.hpp"

#include <algorithm>

#include "json.hpp"

namespace recol {

void Schedule::push(Step s) {
    std::sort(s.begin(), s.end());
    steps.push_back(std::move(s));
}

void Schedule::append(const Schedule& other) {
    if (other.palette_k != palette_k || other.extra != extra)
        throw ContractError("Schedule::append: palette mismatch");
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

ValidationReport validate(const Adjacency& adj, const Coloring& start, const Schedule& sched,
                          const Coloring* target) {
    const int n = static_cast<int>(adj.size());
    auto fail = [](int step, std::vector<Vertex> vs, std::string reason) {
        ValidationReport r;
        r.ok = false;
        r.step = step;
        r.vertices = std::move(vs);
        r.reason = std::move(reason);
        return r;
    };

    if (start.n() != n) return fail(-1, {}, "start coloring size mismatch");
    {
        Vertex u, v;
        if (start.find_conflict(adj, u, v))
            return fail(-1, {u, v}, "start coloring is not proper");
    }
    const int limit = sched.total_palette();
    for (Vertex v = 0; v < n; ++v)
        if (start[v] < 0 || start[v] >= limit)
            return fail(-1, {v}, "start color outside declared palette");

    std::vector<int> cur = start.colors;
    for (int si = 0; si < sched.length(); ++si) {
        const Step& step = sched.steps[si];
        for (size_t i = 0; i < step.size(); ++i) {
            auto [v, c] = step[i];
            if (v < 0 || v >= n) return fail(si, {v}, "vertex out of range");
            if (i > 0 && step[i - 1].first >= v)
                return fail(si, {v}, "step not sorted by vertex or lists a vertex twice");
            if (c < 0 || c >= limit)
                return fail(si, {v},
                            "color " + std::to_string(c) + " outside palette of " +
                                std::to_string(limit));
            if (cur[v] == c) return fail(si, {v}, "vertex recolored to its current color");
        }
        // independence of the recolored set
        for (auto [v, c] : step) {
            (void)c;
            for (Vertex w : adj[v]) {
                auto it = std::lower_bound(step.begin(), step.end(), w,
                                           [](const std::pair<Vertex, int>& p, Vertex x) {
                                               return p.first < x;
                                           });
                if (it != step.end() && it->first == w)
                    return fail(si, {v, w}, "recolored set is not independent");
            }
        }
        for (auto [v, c] : step) cur[v] = c;
        // properness restricted to the touched vertices
        for (auto [v, c] : step) {
            (void)c;
            for (Vertex w : adj[v])
                if (cur[w] == cur[v])
                    return fail(si, {v, w}, "monochromatic edge after step");
        }
    }
    if (target) {
        if (target->n() != n) return fail(sched.length(), {}, "target coloring size mismatch");
        for (Vertex v = 0; v < n; ++v)
            if (cur[v] != (*target)[v])
                return fail(sched.length(), {v}, "final coloring differs from target");
    }
    return {};
}

Coloring apply_schedule(const Coloring& start, const Schedule& sched) {
    Coloring cur = start;
    cur.palette = std::max(cur.palette, sched.total_palette());
    for (const Step& step : sched.steps)
        for (auto [v, c] : step) {
            if (v < 0 || v >= cur.n() || c < 0 || c >= sched.total_palette())
                throw ContractError("apply_schedule: malformed step entry");
            cur[v] = c;
        }
    return cur;
}

Schedule reverse_schedule(const Coloring& start, const Schedule& sched) {
    Schedule out;
    out.palette_k = sched.palette_k;
    out.extra = sched.extra;
    std::vector<int> cur = start.colors;
    std::vector<Step> reversed;
    for (const Step& step : sched.steps) {
        Step undo;
        undo.reserve(step.size());
        for (auto [v, c] : step) {
            undo.emplace_back(v, cur[v]);
            cur[v] = c;
        }
        reversed.push_back(std::move(undo));
    }
    std::reverse(reversed.begin(), reversed.end());
    out.steps = std::move(reversed);
    return out;
}

Schedule compose_via_canonical(const Coloring& alpha, const Schedule& s1, const Coloring& beta,
                               const Schedule& s2) {
    Coloring end1 = apply_schedule(alpha, s1);
    Coloring end2 = apply_schedule(beta, s2);
    if (end1.colors != end2.colors)
        throw ContractError("compose_via_canonical: the two schedules end in different colorings");
    Schedule out;
    out.palette_k = std::max(s1.palette_k, s2.palette_k);
    out.extra = std::max(s1.palette_k + s1.extra, s2.palette_k + s2.extra) - out.palette_k;
    out.steps = s1.steps;
    auto back = reverse_schedule(beta, s2);
    out.steps.insert(out.steps.end(), back.steps.begin(), back.steps.end());
    return out;
}

Schedule merge_parallel(const std::vector<Schedule>& parts) {
    Schedule out;
    if (parts.empty()) return out;
    out.palette_k = parts[0].palette_k;
    out.extra = parts[0].extra;
    size_t len = 0;
    for (const auto& p : parts) {
        if (p.palette_k != out.palette_k || p.extra != out.extra)
            throw ContractError("merge_parallel: palette mismatch");
        len = std::max(len, p.steps.size());
    }
    out.steps.assign(len, {});
    for (const auto& p : parts)
        for (size_t i = 0; i < p.steps.size(); ++i)
            out.steps[i].insert(out.steps[i].end(), p.steps[i].begin(), p.steps[i].end());
    for (auto& s : out.steps) std::sort(s.begin(), s.end());
    return out;
}

std::string schedule_to_json(const Schedule& s) {
    nlohmann::json j;
    j["palette"] = s.palette_k;
    j["extra"] = s.extra;
    auto steps = nlohmann::json::array();
    for (const Step& st : s.steps) {
        auto one = nlohmann::json::array();
        for (auto [v, c] : st) one.push_back({v, c});
        steps.push_back(one);
    }
    j["steps"] = steps;
    return j.dump();
}

Schedule schedule_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ContractError("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                            e.what());
    }
    Schedule s;
    s.palette_k = j.at("palette").get<int>();
    s.extra = j.at("extra").get<int>();
    for (const auto& st : j.at("steps")) {
        Step step;
        for (const auto& pair : st) step.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        s.steps.push_back(std::move(step));
    }
    return s;
}

}  // namespace recol
