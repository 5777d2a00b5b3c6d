#include "rewardtest/reward.hpp"

#include "rewardtest/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace rewardtest {

std::vector<std::vector<int>> WeightedGraph::out() const {
    std::vector<std::vector<int>> o(nodes);
    for (std::size_t e = 0; e < edges.size(); ++e) o[edges[e].src].push_back(static_cast<int>(e));
    return o;
}

ExtendedReward computation_value(const std::vector<Rational>& stem, const std::vector<Rational>& cycle,
                                 bool lasso) {
    Rational s{0};
    for (auto& r : stem) s += r;
    if (!lasso) return s;
    if (cycle.empty()) throw std::invalid_argument("lasso with an empty cycle");
    Rational c{0};
    for (auto& r : cycle) c += r;
    if (c < Rational{0}) return ExtendedReward::neg_inf();
    if (c > Rational{0}) return ExtendedReward::pos_inf();
    // Partial sums repeat with period |cycle|; the liminf is the lowest point of one period.
    Rational run{0}, low{0};
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
        run += cycle[k];
        low = std::min(low, run);
    }
    return s + low;
}

ExtendedReward computation_value(const WeightedGraph& g, const Computation& c) {
    std::vector<Rational> stem, cycle;
    for (int e : c.stem) stem.push_back(g.edges[e].weight);
    for (int e : c.cycle) cycle.push_back(g.edges[e].weight);
    return computation_value(stem, cycle, c.infinite());
}

namespace {

/** Edges of a shortest (by edge count) path from `from` to `to` using allowed edges. */
template <class Allowed>
std::vector<int> bfs_path(const WeightedGraph& g, const std::vector<std::vector<int>>& out, int from, int to,
                          Allowed allowed) {
    std::vector<int> via(g.nodes, -2);
    via[from] = -1;
    std::deque<int> queue{from};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int e : out[v]) {
            int d = g.edges[e].dst;
            if (via[d] != -2 || !allowed(e)) continue;
            via[d] = e;
            queue.push_back(d);
        }
    }
    std::vector<int> path;
    for (int v = to; via[v] >= 0; v = g.edges[via[v]].src) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

/** A cycle through v using allowed edges; v must lie on one. */
template <class Allowed>
std::vector<int> cycle_through(const WeightedGraph& g, const std::vector<std::vector<int>>& out, int v,
                               Allowed allowed) {
    for (int e : out[v]) {
        if (!allowed(e)) continue;
        int d = g.edges[e].dst;
        if (d == v) return {e};
        auto back = bfs_path(g, out, d, v, allowed);
        if (!back.empty()) {
            back.insert(back.begin(), e);
            return back;
        }
    }
    return {};
}

}  // namespace

InfimumResult infimum(const WeightedGraph& g) {
    const int n = g.nodes;
    auto out = g.out();
    auto any = [](int) { return true; };
    std::vector<std::optional<Rational>> dist(n);
    std::vector<int> parent(n, -1);
    dist[g.initial] = Rational{0};
    int changed = -1;
    for (int round = 0; round < n; ++round) {
        changed = -1;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            auto& ed = g.edges[e];
            if (!dist[ed.src]) continue;
            Rational cand = *dist[ed.src] + ed.weight;
            if (!dist[ed.dst] || cand < *dist[ed.dst]) {
                dist[ed.dst] = cand;
                parent[ed.dst] = static_cast<int>(e);
                changed = ed.dst;
            }
        }
        if (changed < 0) break;
    }
    InfimumResult res;
    if (changed >= 0) {
        // Still relaxing after n rounds: the parent chain of `changed` enters a negative cycle.
        int x = changed;
        for (int i = 0; i < n; ++i) x = g.edges[parent[x]].src;
        std::vector<int> cyc;
        int u = x;
        do {
            cyc.push_back(parent[u]);
            u = g.edges[parent[u]].src;
        } while (u != x);
        std::reverse(cyc.begin(), cyc.end());
        res.value = ExtendedReward::neg_inf();
        res.witness.stem = bfs_path(g, out, g.initial, x, any);
        res.witness.cycle = cyc;
        return res;
    }
    auto tight = [&](int e) {
        auto& ed = g.edges[e];
        return dist[ed.src] && dist[ed.dst] && *dist[ed.src] + ed.weight == *dist[ed.dst];
    };
    std::vector<std::vector<int>> tight_adj(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (tight(static_cast<int>(e))) tight_adj[g.edges[e].src].push_back(g.edges[e].dst);
    Scc zero = strongly_connected(tight_adj);
    std::optional<Rational> best;
    int best_node = -1;
    bool best_cycle = false;
    for (int v = 0; v < n; ++v) {
        if (!dist[v]) continue;
        bool endpoint = g.terminal[v] || out[v].empty();
        bool on_zero = zero.cyclic[zero.comp[v]];
        if (!endpoint && !on_zero) continue;
        if (!best || *dist[v] < *best || (*dist[v] == *best && best_cycle && endpoint)) {
            best = dist[v];
            best_node = v;
            best_cycle = !endpoint;
        }
    }
    auto tree_path = [&](int v) {
        std::vector<int> p;
        for (int u = v; parent[u] >= 0; u = g.edges[parent[u]].src) p.push_back(parent[u]);
        std::reverse(p.begin(), p.end());
        return p;
    };
    if (best) {
        res.value = *best;
        res.witness.stem = tree_path(best_node);
        if (best_cycle) {
            int c = zero.comp[best_node];
            res.witness.cycle = cycle_through(g, out, best_node, [&](int e) {
                return tight(e) && zero.comp[g.edges[e].src] == c && zero.comp[g.edges[e].dst] == c;
            });
        }
        return res;
    }
    // Every maximal computation is infinite and every cycle gains.
    std::vector<std::vector<int>> adj(n);
    for (auto& ed : g.edges) adj[ed.src].push_back(ed.dst);
    Scc scc = strongly_connected(adj);
    res.value = ExtendedReward::pos_inf();
    for (int v = 0; v < n; ++v) {
        if (!dist[v] || !scc.cyclic[scc.comp[v]]) continue;
        int c = scc.comp[v];
        res.witness.stem = bfs_path(g, out, g.initial, v, any);
        res.witness.cycle = cycle_through(g, out, v, [&](int e) {
            return scc.comp[g.edges[e].src] == c && scc.comp[g.edges[e].dst] == c;
        });
        break;
    }
    return res;
}

ComputationGraph computation_graph(std::shared_ptr<const Lts> composed) {
    ComputationGraph cg;
    const Lts& lts = *composed;
    cg.lts = composed;
    cg.graph.nodes = static_cast<int>(lts.size());
    cg.graph.initial = lts.initial;
    cg.graph.terminal.assign(lts.size(), true);
    cg.success.assign(lts.size(), false);
    for (std::size_t i = 0; i < lts.transitions.size(); ++i) {
        auto& t = lts.transitions[i];
        if (t.act.is_omega()) cg.success[t.src] = true;
        if (!t.act.is_tau()) continue;
        cg.graph.edges.push_back({t.src, t.dst, t.reward});
        cg.edge_transition.push_back(static_cast<int>(i));
        cg.graph.terminal[t.src] = false;
    }
    if (lts.mode == Mode::CcsBot)
        for (std::size_t v = 0; v < lts.size(); ++v)
            if (!lts.converges[v]) cg.graph.terminal[v] = true;
    return cg;
}

std::shared_ptr<const Lts> explore_for_analysis(const Term& t, Mode mode, std::size_t state_cap) {
    ExplorationBudget b;
    b.state_cap = state_cap;
    b.unguarded = ExplorationBudget::Unguarded::Transitionless;
    return std::make_shared<const Lts>(explore(t, b, mode));
}

namespace {

std::shared_ptr<const ComputationGraph> composed_graph(const Term& test, const Term& proc, Mode mode,
                                                       const RewardOptions& opts, bool require_well_behaved) {
    auto tl = explore_for_analysis(test, mode, opts.state_cap);
    if (require_well_behaved && classify_lts(*tl).well_behaved != Tri::Yes) throw NotWellBehaved(print(test));
    auto pl = explore_for_analysis(proc, mode, opts.state_cap);
    auto prod = std::make_shared<const Lts>(product(*tl, *pl, opts.state_cap));
    return std::make_shared<const ComputationGraph>(computation_graph(prod));
}

}  // namespace

ApplySummary inf_reward(const Term& test, const Term& proc, Mode mode, const RewardOptions& opts) {
    auto cg = composed_graph(test, proc, mode, opts, true);
    auto r = infimum(cg->graph);
    ApplySummary s;
    s.infimum = r.value;
    s.attained = r.attained;
    s.witness = r.witness;
    s.graph = cg;
    if (has_omega(test)) {
        auto c = classical_outcome(*cg);
        s.classical = ApplySummary::Classical{c.may_success, c.must_success};
    }
    return s;
}

bool smyth_leq(const Term& test, const Term& p, const Term& q, Mode mode, const RewardOptions& opts) {
    return inf_reward(test, p, mode, opts).infimum <= inf_reward(test, q, mode, opts).infimum;
}

ClassicalOutcome classical_outcome(const ComputationGraph& cg) {
    const auto& g = cg.graph;
    std::vector<std::vector<int>> adj(g.nodes), quiet(g.nodes);
    for (auto& e : g.edges) {
        adj[e.src].push_back(e.dst);
        if (!cg.success[e.src] && !cg.success[e.dst]) quiet[e.src].push_back(e.dst);
    }
    ClassicalOutcome o;
    auto reach = reachable_from(adj, {g.initial});
    for (int v = 0; v < g.nodes; ++v) o.may_success |= reach[v] && cg.success[v];
    if (cg.success[g.initial]) {
        o.must_success = true;
        return o;
    }
    // An unsuccessful maximal computation stays among non-success states and ends or loops there.
    auto quiet_reach = reachable_from(quiet, {g.initial});
    Scc scc = strongly_connected(quiet);
    bool escape = false;
    for (int v = 0; v < g.nodes; ++v) {
        if (!quiet_reach[v]) continue;
        if (g.terminal[v] || scc.cyclic[scc.comp[v]]) escape = true;
    }
    o.must_success = !escape;
    return o;
}

ClassicalOutcome classical_apply(const Term& test, const Term& proc, Mode mode, const RewardOptions& opts) {
    return classical_outcome(*composed_graph(test, proc, mode, opts, false));
}

namespace {

EmulatedTest emulate(const Term& t, std::size_t cap, const Rational& bonus) {
    ExplorationBudget b;
    b.state_cap = cap;
    b.unguarded = ExplorationBudget::Unguarded::Transitionless;
    Lts lts = explore(t, b, Mode::Ccs);
    std::vector<bool> success(lts.size(), false);
    for (auto& tr : lts.transitions)
        if (tr.act.is_omega()) success[tr.src] = true;
    if (success[lts.initial]) {
        // Immediate success: the verdict is constant (true for must, false for not-may).
        return {nil(), bonus > Rational{0} ? Rational{0} : Rational{1}};
    }
    auto name = [](int i) { return "E" + std::to_string(i); };
    std::vector<std::pair<std::string, Term>> defs;
    std::vector<bool> seen(lts.size(), false);
    std::deque<int> queue{lts.initial};
    seen[lts.initial] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        std::vector<Term> branches;
        for (int ti : lts.out[s]) {
            auto& tr = lts.transitions[ti];
            if (tr.act.is_omega()) continue;
            if (success[tr.dst]) {
                branches.push_back(prefix(tr.act, tr.reward + bonus, nil()));
                continue;
            }
            branches.push_back(prefix(tr.act, tr.reward, var(name(tr.dst))));
            if (!seen[tr.dst]) {
                seen[tr.dst] = true;
                queue.push_back(tr.dst);
            }
        }
        defs.emplace_back(name(s), choice(std::move(branches)));
    }
    return {rec(name(lts.initial), std::move(defs)), bonus > Rational{0} ? Rational{1} : Rational{0}};
}

}  // namespace

EmulatedTest emulate_must(const Term& t, std::size_t cap) { return emulate(t, cap, Rational{1}); }

EmulatedTest emulate_dual_must(const Term& t, std::size_t cap) { return emulate(t, cap, Rational{-1}); }

Term negate_test(const Term& test) {
    if (classify_test(test).well_behaved == Tri::No) throw NotWellBehaved(print(test));
    return negate_rewards(test);
}

}  // namespace rewardtest
