#include "rewardtest/graph.hpp"

#include <algorithm>
#include <deque>

namespace rewardtest {

// Iterative Tarjan.
Scc strongly_connected(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    Scc r;
    r.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::pair<int, std::size_t>> call;
    int next = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i == 0) {
                index[v] = low[v] = next++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (index[w] == -1) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    r.comp[w] = r.count;
                } while (w != v);
                ++r.count;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    std::vector<int> members(r.count, 0);
    for (int v = 0; v < n; ++v) ++members[r.comp[v]];
    r.cyclic.assign(r.count, false);
    for (int v = 0; v < n; ++v) {
        if (members[r.comp[v]] > 1) r.cyclic[r.comp[v]] = true;
        for (int w : adj[v])
            if (w == v) r.cyclic[r.comp[v]] = true;
    }
    return r;
}

std::vector<bool> can_reach(const std::vector<std::vector<int>>& adj, const std::vector<bool>& seeds) {
    const std::size_t n = adj.size();
    std::vector<std::vector<int>> rev(n);
    for (std::size_t v = 0; v < n; ++v)
        for (int w : adj[v]) rev[w].push_back(static_cast<int>(v));
    std::vector<bool> out(n, false);
    std::deque<int> q;
    for (std::size_t v = 0; v < n; ++v)
        if (seeds[v]) {
            out[v] = true;
            q.push_back(static_cast<int>(v));
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : rev[v])
            if (!out[u]) {
                out[u] = true;
                q.push_back(u);
            }
    }
    return out;
}

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, const std::vector<int>& sources) {
    std::vector<bool> seen(adj.size(), false);
    std::deque<int> q;
    for (int s : sources)
        if (!seen[s]) {
            seen[s] = true;
            q.push_back(s);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                q.push_back(w);
            }
    }
    return seen;
}

}  // namespace rewardtest
