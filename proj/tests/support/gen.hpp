#pragma once

// Random generators and brute-force oracles shared by the unit tests and the acceptance run.
// The oracles deliberately avoid the library's algorithms: they enumerate paths directly.

#include "rewardtest/lts.hpp"
#include "rewardtest/reward.hpp"
#include "rewardtest/syntax.hpp"
#include "rewardtest/synthesis.hpp"
#include "rewardtest/term.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gen {

using namespace rewardtest;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    bool chance(double p) { return std::bernoulli_distribution(p)(eng); }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[uniform(0, int(v.size()) - 1)]; }
};

struct Edge {
    Action act;
    Rational reward{0};
    int dst = 0;
};
using Graph = std::vector<std::vector<Edge>>;

/** rec X0 { X0 = ...; X1 = ... } with one equation per node. */
inline Term graph_term(const Graph& g) {
    std::vector<std::pair<std::string, Term>> defs;
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<Term> branches;
        for (auto& e : g[i]) branches.push_back(prefix(e.act, e.reward, var("X" + std::to_string(e.dst))));
        defs.emplace_back("X" + std::to_string(i), choice(std::move(branches)));
    }
    return rec("X0", std::move(defs));
}

struct ShapeOptions {
    int max_states = 4;
    int max_branches = 3;
    double p_tau = 0.25;
    double p_dead = 0.2;  // a state without outgoing edges
};

inline Graph random_shape(Rng& r, const ShapeOptions& o, const std::function<Action()>& visible) {
    int n = r.uniform(1, o.max_states);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (r.chance(o.p_dead)) continue;
        int k = r.uniform(1, o.max_branches);
        for (int j = 0; j < k; ++j) {
            Edge e;
            e.act = r.chance(o.p_tau) ? Action::tau() : visible();
            e.dst = r.uniform(0, n - 1);
            g[i].push_back(e);
        }
    }
    return g;
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"a", "b", "c"};
    return n;
}

inline Term random_process(Rng& r, const ShapeOptions& o = {}) {
    return graph_term(random_shape(r, o, [&] { return Action::name(r.pick(names())); }));
}

/** A process related to p by a small edit, so that a fair share of pairs are ordered. */
inline Term related_process(Rng& r, const Term& p, const ShapeOptions& o = {}) {
    switch (r.uniform(0, 5)) {
        case 0: return p;
        case 1: return choice(p, random_process(r, o));
        case 2: return prefix(Action::tau(), p);
        case 3: return choice(prefix(Action::tau(), p), prefix(Action::tau(), random_process(r, o)));
        case 4: return delta(p);
        default: return random_process(r, o);
    }
}

/** Test over co-names, tau and omega; rewards from `reward`. */
inline Term random_test(Rng& r, const ShapeOptions& o, const std::function<Rational()>& reward,
                        double p_omega = 0.0) {
    Graph g = random_shape(r, o, [&] { return Action::coname(r.pick(names())); });
    for (auto& es : g)
        for (auto& e : es) {
            if (p_omega > 0 && r.chance(p_omega))
                e.act = Action::omega();
            else
                e.reward = reward();
        }
    return graph_term(g);
}

/** A test in the class of a base preorder: signs drawn per class, then rejection sampling. */
inline Term random_class_test(Rng& r, BaseOrder base, const ShapeOptions& o = {}) {
    int lo = -1, hi = 1;
    if (base == BaseOrder::FDIBot) lo = 0;
    if (base == BaseOrder::T || base == BaseOrder::TInf) hi = 0;
    for (;;) {
        Term t = random_test(r, o, [&] { return Rational{r.uniform(lo, hi)}; });
        if (in_test_class(base, classify_test(t))) return t;
    }
}

// ---------------------------------------------------------------------------------------------
// Reward infimum by enumeration of simple paths and simple cycles.

/** Weights in {-1, 0, 1}; -1 with probability p_neg, the rest split evenly. */
inline WeightedGraph random_weighted_graph(Rng& r, int max_nodes = 10, double p_terminal = 0.1,
                                           double p_neg = 1.0 / 3) {
    WeightedGraph g;
    g.nodes = r.uniform(1, max_nodes);
    g.initial = 0;
    g.terminal.assign(g.nodes, false);
    for (int i = 0; i < g.nodes; ++i) {
        int k = r.chance(0.15) ? 0 : r.uniform(1, 3);
        for (int j = 0; j < k; ++j) {
            Rational w = r.chance(p_neg) ? Rational{-1} : Rational{r.uniform(0, 1)};
            g.edges.push_back({i, r.uniform(0, g.nodes - 1), w});
        }
        if (k > 0 && r.chance(p_terminal)) g.terminal[i] = true;
    }
    return g;
}

inline ExtendedReward brute_infimum(const WeightedGraph& g) {
    std::vector<std::vector<int>> out(g.nodes);
    for (int e = 0; e < int(g.edges.size()); ++e) out[g.edges[e].src].push_back(e);

    // Simple cycles as edge lists, each recorded once per node it passes through (rotated).
    std::vector<std::vector<std::vector<int>>> cycles_at(g.nodes);
    for (int s = 0; s < g.nodes; ++s) {
        std::vector<int> path;
        std::vector<bool> on(g.nodes, false);
        std::function<void(int)> dfs = [&](int u) {
            for (int e : out[u]) {
                int v = g.edges[e].dst;
                if (v == s) {
                    path.push_back(e);
                    for (std::size_t k = 0; k < path.size(); ++k) {
                        std::vector<int> rot(path.begin() + k, path.end());
                        rot.insert(rot.end(), path.begin(), path.begin() + k);
                        cycles_at[g.edges[rot.front()].src].push_back(rot);
                    }
                    path.pop_back();
                } else if (v > s && !on[v]) {
                    on[v] = true;
                    path.push_back(e);
                    dfs(v);
                    path.pop_back();
                    on[v] = false;
                }
            }
        };
        on[s] = true;
        dfs(s);
    }

    std::optional<ExtendedReward> best;
    auto offer = [&](ExtendedReward v) {
        if (!best || v < *best) best = v;
    };
    std::vector<bool> on(g.nodes, false);
    std::function<void(int, Rational)> walk = [&](int u, Rational sum) {
        if (g.terminal[u] || out[u].empty()) offer(sum);
        for (auto& c : cycles_at[u]) {
            Rational total{0}, low{0};
            for (int e : c) {
                low = std::min(low, total);
                total += g.edges[e].weight;
            }
            if (total < Rational{0})
                offer(ExtendedReward::neg_inf());
            else if (total > Rational{0})
                offer(ExtendedReward::pos_inf());
            else
                offer(sum + low);
        }
        for (int e : out[u]) {
            int v = g.edges[e].dst;
            if (on[v]) continue;
            on[v] = true;
            walk(v, sum + g.edges[e].weight);
            on[v] = false;
        }
    };
    on[g.initial] = true;
    walk(g.initial, Rational{0});
    return *best;
}

/** A test whose composition with 0 is exactly g, when no node of g is terminal. */
inline Term weighted_graph_test(const WeightedGraph& g) {
    Graph t(g.nodes);
    for (auto& e : g.edges) t[e.src].push_back({Action::tau(), e.weight, e.dst});
    return graph_term(t);
}

// ---------------------------------------------------------------------------------------------
// Observations by brute force over words up to a length bound.

struct BruteObs {
    const Lts* lts = nullptr;
    std::vector<std::string> letters;  // visible action strings
    std::vector<std::set<int>> tau_reach;
    std::vector<bool> diverges;

    explicit BruteObs(const Lts& l, std::vector<std::string> alpha) : lts(&l), letters(std::move(alpha)) {
        const int n = int(l.size());
        tau_reach.resize(n);
        for (int s = 0; s < n; ++s) {
            std::vector<int> stack = {s};
            tau_reach[s].insert(s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int ti : l.out[u]) {
                    auto& t = l.transitions[ti];
                    if (t.act.is_tau() && tau_reach[s].insert(t.dst).second) stack.push_back(t.dst);
                }
            }
        }
        // A state diverges iff some tau-reachable state lies on a tau cycle.
        diverges.assign(n, false);
        for (int s = 0; s < n; ++s)
            for (int u : tau_reach[s])
                for (int ti : l.out[u]) {
                    auto& t = l.transitions[ti];
                    if (t.act.is_tau() && tau_reach[t.dst].count(u)) diverges[s] = true;
                }
    }

    std::set<int> after(const std::vector<std::string>& w) const {
        std::set<int> cur = tau_reach[lts->initial];
        for (auto& a : w) {
            std::set<int> nxt;
            for (int u : cur)
                for (int ti : lts->out[u]) {
                    auto& t = lts->transitions[ti];
                    if (t.act.visible() && t.act.str() == a) nxt.insert(tau_reach[t.dst].begin(), tau_reach[t.dst].end());
                }
            cur = std::move(nxt);
        }
        return cur;
    }

    bool stable(int s) const {
        for (int ti : lts->out[s])
            if (lts->transitions[ti].act.is_tau()) return false;
        return true;
    }

    std::set<std::string> initials(int s) const {
        std::set<std::string> r;
        for (int ti : lts->out[s])
            if (lts->transitions[ti].act.visible()) r.insert(lts->transitions[ti].act.str());
        return r;
    }

    /** Every word up to `len` letters, shortest first. */
    std::vector<std::vector<std::string>> words(int len) const {
        std::vector<std::vector<std::string>> all = {{}};
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (int(all[i].size()) == len) continue;
            for (auto& a : letters) {
                auto w = all[i];
                w.push_back(a);
                all.push_back(w);
            }
        }
        return all;
    }

    bool is_trace(const std::vector<std::string>& w) const { return !after(w).empty(); }

    bool is_divergence(const std::vector<std::string>& w) const {
        for (int s : after(w))
            if (diverges[s]) return true;
        return false;
    }

    /** Can the process reach, after w, a stable state refusing every letter of x. */
    bool is_failure(const std::vector<std::string>& w, const std::set<std::string>& x) const {
        for (int s : after(w)) {
            if (!stable(s)) continue;
            auto in = initials(s);
            bool ok = true;
            for (auto& a : x) ok = ok && !in.count(a);
            if (ok) return true;
        }
        return false;
    }
};

}  // namespace gen
