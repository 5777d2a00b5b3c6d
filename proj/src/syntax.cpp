#include "rewardtest/syntax.hpp"

#include "rewardtest/graph.hpp"

#include <unordered_map>
#include <unordered_set>

namespace rewardtest {

namespace {

struct ConvergenceSearch {
    std::unordered_set<std::string> in_progress;
    std::unordered_map<std::string, bool> done;

    bool run(const Term& t) {
        switch (t->kind) {
            case TermKind::Prefix: return true;
            case TermKind::Choice:
                for (auto& k : t->kids)
                    if (!run(k)) return false;
                return true;
            case TermKind::Par: return run(t->kids[0]) && run(t->kids[1]);
            case TermKind::Restrict:
            case TermKind::Relabel: return run(t->body());
            case TermKind::Var: return false;
            case TermKind::Rec: {
                auto it = done.find(t->key);
                if (it != done.end()) return it->second;
                // Revisiting a recursion inside its own derivation: no finite derivation exists.
                if (!in_progress.insert(t->key).second) return false;
                bool r = run(unfold(t));
                in_progress.erase(t->key);
                // A false result may depend on the open assumption; true results never do.
                if (r || in_progress.empty()) done.emplace(t->key, r);
                return r;
            }
        }
        return false;
    }
};

}  // namespace

bool converges(const Term& t) {
    ConvergenceSearch s;
    return s.run(t);
}

std::string fresh_name(const std::set<std::string>& used) {
    std::string x = "fresh";
    for (int i = 1; used.count(x); ++i) x = "fresh" + std::to_string(i);
    return x;
}

std::set<std::string> alphabet(const std::vector<Term>& terms) {
    std::set<std::string> out;
    for (auto& t : terms) {
        auto n = names_of(t);
        out.insert(n.begin(), n.end());
    }
    out.insert(fresh_name(out));
    return out;
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::No: return "no";
        case Tri::Yes: return "yes";
        default: return "unknown";
    }
}

TestClass classify_lts(const Lts& lts) {
    TestClass c;
    if (lts.truncated) return c;
    const std::size_t n = lts.size();
    bool has_neg = false, has_pos = false;
    std::vector<std::vector<int>> adj(n);
    for (auto& t : lts.transitions) {
        adj[t.src].push_back(t.dst);
        has_neg |= t.reward < Rational{0};
        has_pos |= t.reward > Rational{0};
    }
    c.nonnegative = has_neg ? Tri::No : Tri::Yes;
    c.nonpositive = has_pos ? Tri::No : Tri::Yes;
    Scc scc = strongly_connected(adj);
    bool neg_on_cycle = false;
    std::vector<bool> comp_neg(scc.count, false), comp_pos(scc.count, false);
    for (auto& t : lts.transitions) {
        if (scc.comp[t.src] != scc.comp[t.dst]) continue;
        if (t.reward < Rational{0}) {
            neg_on_cycle = true;
            comp_neg[scc.comp[t.src]] = true;
        }
        if (t.reward > Rational{0}) comp_pos[scc.comp[t.src]] = true;
    }
    c.finite_penalty = neg_on_cycle ? Tri::No : Tri::Yes;
    // Two penalties on one path: a penalty reachable from the target of a penalty.
    std::vector<bool> neg_src(n, false);
    for (auto& t : lts.transitions)
        if (t.reward < Rational{0}) neg_src[t.src] = true;
    auto reaches_neg = can_reach(adj, neg_src);
    bool two = false;
    for (auto& t : lts.transitions)
        if (t.reward < Rational{0} && reaches_neg[t.dst]) two = true;
    c.single_penalty = two ? Tri::No : Tri::Yes;
    // Sufficient: no cycle mixes signs, so partial sums are eventually monotone on every path.
    bool mixed = false;
    for (int k = 0; k < scc.count; ++k) mixed |= comp_neg[k] && comp_pos[k];
    c.well_behaved = mixed ? Tri::Unknown : Tri::Yes;
    return c;
}

TestClass classify_test(const Term& t, std::size_t state_cap) {
    ExplorationBudget b;
    b.state_cap = state_cap;
    b.on_exceed = ExplorationBudget::OnExceed::Truncate;
    b.unguarded = ExplorationBudget::Unguarded::Transitionless;
    return classify_lts(explore(t, b, Mode::Ccs));
}

}  // namespace rewardtest
