#include "rewardtest/observations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rewardtest {

std::string to_string(ObservationVariant v) {
    switch (v) {
        case ObservationVariant::Plain: return "plain";
        case ObservationVariant::DClosed: return "d";
        default: return "bot";
    }
}

std::string Lasso::str() const { return word_str(stem) + " (" + word_str(cycle) + ")^w"; }

Bits ObservationSemantics::after(const Bits& set, int letter) const {
    Bits out(size());
    for (int s : set.members())
        for (auto [l, t] : visible[s])
            if (l == letter) out |= tau_closure[t];
    return out;
}

Bits ObservationSemantics::after(const std::vector<int>& word) const {
    Bits cur = start();
    for (int l : word) cur = after(cur, l);
    return cur;
}

std::vector<int> letters_of(const Alphabet& alpha, const Word& w) {
    std::vector<int> r;
    for (auto& a : w) {
        int i = alpha.index(a);
        if (i < 0) throw std::invalid_argument("letter " + a.str() + " is not in the alphabet");
        r.push_back(i);
    }
    return r;
}

Word word_of(const Alphabet& alpha, const std::vector<int>& letters) {
    Word w;
    for (int l : letters) w.push_back(alpha[l]);
    return w;
}

ObservationSemantics build_observations(std::shared_ptr<const Lts> lts, const Alphabet& alpha) {
    if (lts->truncated) throw std::invalid_argument("observations of a truncated state space are undefined");
    ObservationSemantics s;
    s.lts = lts;
    s.alpha = alpha;
    const std::size_t n = lts->size();
    std::vector<std::vector<int>> tau(n), all(n);
    s.visible.assign(n, {});
    for (auto& t : lts->transitions) {
        all[t.src].push_back(t.dst);
        if (t.act.is_tau()) {
            tau[t.src].push_back(t.dst);
        } else if (t.act.visible()) {
            int l = alpha.index(t.act);
            if (l < 0) throw std::invalid_argument("alphabet mismatch: " + t.act.str());
            s.visible[t.src].emplace_back(l, t.dst);
        } else {
            throw std::invalid_argument("observations of a system with omega");
        }
    }
    s.tau_closure.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto r = reachable_from(tau, {static_cast<int>(v)});
        Bits b(n);
        for (std::size_t u = 0; u < n; ++u)
            if (r[u]) b.set(u);
        s.tau_closure[v] = b;
    }
    s.divergent = Bits(n);
    s.deadlock = Bits(n);
    s.stable = Bits(n);
    s.refusal.assign(n, Bits());
    for (std::size_t v = 0; v < n; ++v) {
        if (lts->diverges[v]) s.divergent.set(v);
        if (!lts->stable[v]) continue;
        s.stable.set(v);
        Bits r(alpha.size());
        for (std::size_t l = 0; l < alpha.size(); ++l) r.set(l);
        for (auto [l, t] : s.visible[v]) r.reset(l);
        s.refusal[v] = r;
        if (s.visible[v].empty()) s.deadlock.set(v);
    }
    Scc scc = strongly_connected(all);
    s.component = scc.comp;
    s.visible_cycle.assign(scc.count, false);
    for (auto& t : lts->transitions)
        if (t.act.visible() && scc.comp[t.src] == scc.comp[t.dst]) s.visible_cycle[scc.comp[t.src]] = true;
    std::vector<bool> seeds(n), live_seeds(n);
    for (std::size_t v = 0; v < n; ++v) {
        seeds[v] = s.visible_cycle[scc.comp[v]];
        live_seeds[v] = seeds[v] || lts->diverges[v];
    }
    auto ic = can_reach(all, seeds);
    auto lv = can_reach(all, live_seeds);
    s.inf_capable = Bits(n);
    s.live = Bits(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (ic[v]) s.inf_capable.set(v);
        if (lv[v]) s.live.set(v);
    }
    for (std::size_t v = 0; v < n; ++v) s.trace_nfa.add_state(true);
    s.trace_nfa.start = {lts->initial};
    for (std::size_t v = 0; v < n; ++v) {
        for (int u : tau[v]) s.trace_nfa.add_edge(static_cast<int>(v), -1, u);
        for (auto [l, t] : s.visible[v]) s.trace_nfa.add_edge(static_cast<int>(v), l, t);
    }
    return s;
}

namespace {

void require_same_alphabet(const ObservationSemantics& p, const ObservationSemantics& q) {
    if (p.alpha.letters() != q.alpha.letters()) throw std::invalid_argument("alphabet mismatch");
}

/** Visible labels along a breadth-first path from s to the first state satisfying goal. */
template <class Goal, class Allowed>
std::optional<std::pair<Word, int>> path_to(const ObservationSemantics& sem, int s, Goal goal, Allowed allowed) {
    const Lts& lts = *sem.lts;
    std::vector<int> via(lts.size(), -2);
    std::deque<int> queue{s};
    via[s] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (goal(v)) {
            Word w;
            for (int u = v; via[u] >= 0; u = lts.transitions[via[u]].src)
                if (lts.transitions[via[u]].act.visible()) w.push_back(lts.transitions[via[u]].act);
            std::reverse(w.begin(), w.end());
            return std::pair(w, v);
        }
        for (int ti : lts.out[v]) {
            int d = lts.transitions[ti].dst;
            if (via[d] != -2 || !allowed(d)) continue;
            via[d] = ti;
            queue.push_back(d);
        }
    }
    return std::nullopt;
}

/** An infinite visible behaviour from s: reach a component with a visible cycle and go around it. */
std::optional<Lasso> visible_lasso(const ObservationSemantics& sem, int s) {
    auto any = [](int) { return true; };
    auto entry = path_to(sem, s, [&](int v) { return sem.visible_cycle[sem.component[v]]; }, any);
    if (!entry) return std::nullopt;
    int u = entry->second;
    int c = sem.component[u];
    auto inside = [&](int v) { return sem.component[v] == c; };
    const Lts& lts = *sem.lts;
    for (auto& t : lts.transitions) {
        if (!t.act.visible() || sem.component[t.src] != c || sem.component[t.dst] != c) continue;
        auto to_edge = path_to(sem, u, [&](int v) { return v == t.src; }, inside);
        auto back = path_to(sem, t.dst, [&](int v) { return v == u; }, inside);
        Lasso l;
        l.stem = entry->first;
        l.cycle = to_edge->first;
        l.cycle.push_back(t.act);
        l.cycle.insert(l.cycle.end(), back->first.begin(), back->first.end());
        return l;
    }
    return std::nullopt;
}

enum class Visit { Continue, Prune, Fail };

struct Node {
    Bits q;
    bool qtop = false;
    Bits p;
    bool ptop = false;
    int parent = -1;
    int letter = -1;
};

struct WalkResult {
    std::vector<int> word;
    Node node;
};

/**
 * Breadth-first walk over words, tracking Q's and P's weak successor sets together.
 * With absorb, a side whose set meets a divergence becomes "top" (every extension is observed).
 */
template <class Visitor>
std::optional<WalkResult> walk(const ObservationSemantics& p, const ObservationSemantics& q, bool absorb,
                               Visitor visit) {
    require_same_alphabet(p, q);
    auto settle = [&](Node& n) {
        if (absorb && !n.qtop && n.q.intersects(q.divergent)) {
            n.qtop = true;
            n.q = Bits(q.size());
        }
        if (absorb && !n.ptop && n.p.intersects(p.divergent)) {
            n.ptop = true;
            n.p = Bits(p.size());
        }
    };
    std::vector<Node> nodes;
    std::set<std::tuple<bool, Bits, bool, Bits>> seen;
    Node root;
    root.q = q.start();
    root.p = p.start();
    settle(root);
    nodes.push_back(root);
    seen.insert({root.qtop, root.q, root.ptop, root.p});
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Node cur = nodes[k];
        Visit v = visit(cur);
        if (v == Visit::Fail) {
            WalkResult r;
            for (int i = static_cast<int>(k); nodes[i].parent >= 0; i = nodes[i].parent) r.word.push_back(nodes[i].letter);
            std::reverse(r.word.begin(), r.word.end());
            r.node = cur;
            return r;
        }
        if (v == Visit::Prune) continue;
        for (std::size_t l = 0; l < q.alpha.size(); ++l) {
            Node nx;
            nx.parent = static_cast<int>(k);
            nx.letter = static_cast<int>(l);
            nx.qtop = cur.qtop;
            nx.q = cur.qtop ? Bits(q.size()) : q.after(cur.q, static_cast<int>(l));
            if (!nx.qtop && nx.q.none()) continue;
            nx.ptop = cur.ptop;
            nx.p = cur.ptop ? Bits(p.size()) : p.after(cur.p, static_cast<int>(l));
            settle(nx);
            if (!seen.insert({nx.qtop, nx.q, nx.ptop, nx.p}).second) continue;
            nodes.push_back(nx);
        }
    }
    return std::nullopt;
}

}  // namespace

Inclusion ptr_included(const ObservationSemantics& p, const ObservationSemantics& q) {
    auto r = walk(p, q, false, [](const Node& n) { return n.p.none() ? Visit::Fail : Visit::Continue; });
    Inclusion inc;
    if (r) {
        inc.included = false;
        inc.word = word_of(q.alpha, r->word);
    }
    return inc;
}

Inclusion divergences_included(const ObservationSemantics& p, const ObservationSemantics& q, ObservationVariant v) {
    std::optional<WalkResult> r;
    if (v == ObservationVariant::BotClosed) {
        r = walk(p, q, true, [](const Node& n) {
            if (n.ptop) return Visit::Prune;
            return n.qtop ? Visit::Fail : Visit::Continue;
        });
    } else {
        r = walk(p, q, false, [&](const Node& n) {
            return n.q.intersects(q.divergent) && !n.p.intersects(p.divergent) ? Visit::Fail : Visit::Continue;
        });
    }
    Inclusion inc;
    if (r) {
        inc.included = false;
        inc.word = word_of(q.alpha, r->word);
    }
    return inc;
}

Inclusion failures_included(const ObservationSemantics& p, const ObservationSemantics& q, ObservationVariant v) {
    const bool bot = v == ObservationVariant::BotClosed;
    Bits full(q.alpha.size());
    for (std::size_t l = 0; l < q.alpha.size(); ++l) full.set(l);
    Bits failing;
    auto r = walk(p, q, bot, [&](const Node& n) {
        if (n.ptop) return Visit::Prune;
        bool p_all = v == ObservationVariant::DClosed && n.p.intersects(p.divergent);
        if (p_all) return Visit::Continue;
        bool q_all = n.qtop || (v == ObservationVariant::DClosed && n.q.intersects(q.divergent));
        std::vector<Bits> refusals;
        if (q_all) {
            refusals.push_back(full);
        } else {
            for (int s : (n.q & q.stable).members()) refusals.push_back(q.refusal[s]);
        }
        for (auto& x : refusals) {
            bool matched = false;
            for (int s : (n.p & p.stable).members())
                if (x.subset_of(p.refusal[s])) {
                    matched = true;
                    break;
                }
            if (!matched) {
                failing = x;
                return Visit::Fail;
            }
        }
        return Visit::Continue;
    });
    Inclusion inc;
    if (r) {
        inc.included = false;
        inc.word = word_of(q.alpha, r->word);
        inc.refusal = word_of(q.alpha, failing.members());
    }
    return inc;
}

Inclusion infinite_traces_included(const ObservationSemantics& p, const ObservationSemantics& q,
                                   ObservationVariant v) {
    Inclusion inc;
    if (v == ObservationVariant::BotClosed) {
        auto r = walk(p, q, true, [&](const Node& n) {
            if (n.ptop) return Visit::Prune;
            if (!n.qtop && !n.q.intersects(q.live)) return Visit::Prune;
            return n.p.none() ? Visit::Fail : Visit::Continue;
        });
        if (!r) return inc;
        inc.included = false;
        inc.word = word_of(q.alpha, r->word);
        inc.cut = r->word.size();
        Lasso l;
        l.stem = inc.word;
        const Word filler{q.alpha[0]};
        if (r->node.qtop) {
            l.cycle = filler;
        } else {
            int s = (r->node.q & q.live).members().front();
            std::optional<Lasso> vis;
            if (q.inf_capable.test(s)) vis = visible_lasso(q, s);
            if (vis) {
                l.stem.insert(l.stem.end(), vis->stem.begin(), vis->stem.end());
                l.cycle = vis->cycle;
            } else {
                auto d = path_to(q, s, [&](int u) { return q.divergent.test(u); }, [](int) { return true; });
                l.stem.insert(l.stem.end(), d->first.begin(), d->first.end());
                l.cycle = filler;
            }
        }
        inc.lasso = l;
        return inc;
    }
    auto r = walk(p, q, false, [&](const Node& n) {
        if (!n.q.intersects(q.inf_capable)) return Visit::Prune;
        return n.p.none() ? Visit::Fail : Visit::Continue;
    });
    if (!r) return inc;
    inc.included = false;
    inc.word = word_of(q.alpha, r->word);
    inc.cut = r->word.size();
    int s = (r->node.q & q.inf_capable).members().front();
    auto vis = visible_lasso(q, s);
    Lasso l;
    l.stem = inc.word;
    l.stem.insert(l.stem.end(), vis->stem.begin(), vis->stem.end());
    l.cycle = vis->cycle;
    inc.lasso = l;
    return inc;
}

ObservationSummary summarize(const ObservationSemantics& s, std::size_t max_len) {
    constexpr std::size_t kMaxWords = 5000;
    ObservationSummary out;
    std::set<std::string> lasso_seen;
    std::deque<std::pair<std::vector<int>, Bits>> queue;
    queue.emplace_back(std::vector<int>{}, s.start());
    while (!queue.empty() && out.ptr.size() < kMaxWords) {
        auto [w, set] = queue.front();
        queue.pop_front();
        Word word = word_of(s.alpha, w);
        out.ptr.push_back(word);
        if (set.intersects(s.divergent)) out.divergences.push_back(word);
        if (set.intersects(s.deadlock)) out.deadlocks.push_back(word);
        std::set<Bits> refusals;
        for (int v : (set & s.stable).members()) refusals.insert(s.refusal[v]);
        for (auto& x : refusals) out.maximal_failures.emplace_back(word, word_of(s.alpha, x.members()));
        if (set.intersects(s.inf_capable)) {
            auto l = visible_lasso(s, (set & s.inf_capable).members().front());
            if (l) {
                Lasso full{word, l->cycle};
                full.stem.insert(full.stem.end(), l->stem.begin(), l->stem.end());
                if (lasso_seen.insert(full.str()).second && out.lassos.size() < 64) out.lassos.push_back(full);
            }
        }
        if (w.size() >= max_len) continue;
        for (std::size_t l = 0; l < s.alpha.size(); ++l) {
            Bits nx = s.after(set, static_cast<int>(l));
            if (nx.none()) continue;
            auto nw = w;
            nw.push_back(static_cast<int>(l));
            queue.emplace_back(std::move(nw), nx);
        }
    }
    return out;
}

}  // namespace rewardtest
