#include "rewardtest/lts.hpp"

#include "rewardtest/graph.hpp"
#include "rewardtest/syntax.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace rewardtest {

std::string to_string(Mode m) { return m == Mode::Ccs ? "ccs" : "ccs-bot"; }

Mode parse_mode(const std::string& s) {
    if (s == "ccs") return Mode::Ccs;
    if (s == "ccs-bot" || s == "ccs_bot") return Mode::CcsBot;
    throw std::invalid_argument("unknown mode " + s);
}

namespace {

constexpr std::size_t kUnfoldCap = 20000;

struct Stepper {
    std::vector<const std::string*> unfolding;  // rec terms currently being unfolded

    std::vector<Step> run(const Term& t) {
        switch (t->kind) {
            case TermKind::Prefix: return {{t->act, t->reward, t->body()}};
            case TermKind::Choice: {
                std::vector<Step> all;
                for (auto& k : t->kids) {
                    auto s = run(k);
                    all.insert(all.end(), s.begin(), s.end());
                }
                return all;
            }
            case TermKind::Par: {
                const Term& l = t->kids[0];
                const Term& r = t->kids[1];
                auto ls = run(l);
                auto rs = run(r);
                std::vector<Step> all;
                for (auto& s : ls) all.push_back({s.act, s.reward, par(s.target, r)});
                for (auto& s : rs) all.push_back({s.act, s.reward, par(l, s.target)});
                for (auto& a : ls) {
                    if (!a.act.visible()) continue;
                    for (auto& b : rs)
                        if (b.act == a.act.complement())
                            all.push_back({Action::tau(), a.reward + b.reward, par(a.target, b.target)});
                }
                return all;
            }
            case TermKind::Restrict: {
                std::vector<Step> all;
                for (auto& s : run(t->body())) {
                    if (s.act.visible() && std::binary_search(t->names.begin(), t->names.end(), s.act.base)) continue;
                    all.push_back({s.act, s.reward, restrict(s.target, t->names)});
                }
                return all;
            }
            case TermKind::Relabel: {
                std::vector<Step> all;
                for (auto& s : run(t->body())) {
                    Action a = s.act;
                    if (a.visible()) {
                        auto it = std::lower_bound(t->relabel.begin(), t->relabel.end(), a.base,
                                                   [](const auto& p, const std::string& b) { return p.first < b; });
                        if (it != t->relabel.end() && it->first == a.base) a.base = it->second;
                    }
                    all.push_back({a, s.reward, relabel(s.target, t->relabel)});
                }
                return all;
            }
            case TermKind::Var: throw std::invalid_argument("step: free variable " + t->var);
            case TermKind::Rec: {
                for (auto* k : unfolding)
                    if (*k == t->key) return {};  // circular derivation: contributes nothing
                if (unfolding.size() > kUnfoldCap) throw NonConvergentUnfolding(t->key);
                unfolding.push_back(&t->key);
                auto r = run(unfold(t));
                unfolding.pop_back();
                return r;
            }
        }
        return {};
    }
};

bool step_less(const Step& a, const Step& b) {
    if (a.act != b.act) return a.act < b.act;
    if (a.reward != b.reward) return a.reward < b.reward;
    return a.target->key < b.target->key;
}

}  // namespace

std::vector<Step> step(const Term& t) {
    Stepper s;
    auto r = s.run(t);
    std::sort(r.begin(), r.end(), step_less);
    r.erase(std::unique(r.begin(), r.end(),
                        [](const Step& a, const Step& b) {
                            return a.act == b.act && a.reward == b.reward && same(a.target, b.target);
                        }),
            r.end());
    return r;
}

void compute_flags(Lts& lts) {
    const std::size_t n = lts.size();
    lts.out.assign(n, {});
    for (std::size_t i = 0; i < lts.transitions.size(); ++i) lts.out[lts.transitions[i].src].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> tau(n);
    lts.stable.assign(n, true);
    for (auto& tr : lts.transitions)
        if (tr.act.is_tau()) {
            tau[tr.src].push_back(tr.dst);
            lts.stable[tr.src] = false;
        }
    Scc scc = strongly_connected(tau);
    std::vector<bool> seeds(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        seeds[v] = scc.cyclic[scc.comp[v]];
        if (lts.mode == Mode::CcsBot && !lts.converges[v]) seeds[v] = true;
    }
    lts.diverges = can_reach(tau, seeds);
}

Lts explore(const Term& t, const ExplorationBudget& budget, Mode mode) {
    if (!closed(t)) throw std::invalid_argument("explore: term has free variables: " + t->key);
    Lts lts;
    lts.mode = mode;
    std::unordered_map<std::string, int> index;
    std::deque<int> queue;
    auto add = [&](const Term& s) -> int {
        auto it = index.find(s->key);
        if (it != index.end()) return it->second;
        if (lts.states.size() >= budget.state_cap) {
            if (budget.on_exceed == ExplorationBudget::OnExceed::Error) throw StateCapExceeded(budget.state_cap);
            lts.truncated = true;
            return -1;
        }
        int id = static_cast<int>(lts.states.size());
        lts.states.push_back(s);
        index.emplace(s->key, id);
        queue.push_back(id);
        return id;
    };
    lts.initial = add(t);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (auto& st : step(lts.states[s])) {
            int d = add(st.target);
            if (d < 0) continue;
            lts.transitions.push_back({s, st.act, st.reward, d});
        }
    }
    lts.converges.resize(lts.size());
    for (std::size_t i = 0; i < lts.size(); ++i) {
        lts.converges[i] = converges(lts.states[i]);
        if (!lts.converges[i] && mode == Mode::Ccs && budget.unguarded == ExplorationBudget::Unguarded::Reject)
            throw NonConvergentUnfolding(lts.states[i]->key);
    }
    compute_flags(lts);
    return lts;
}

Term compose(const Term& test, const Term& proc) { return par(test, proc); }

Lts product(const Lts& tl, const Lts& pl, std::size_t state_cap) {
    if (tl.truncated || pl.truncated) throw std::invalid_argument("product of a truncated system");
    Lts lts;
    lts.mode = (tl.mode == Mode::CcsBot || pl.mode == Mode::CcsBot) ? Mode::CcsBot : Mode::Ccs;
    const std::int64_t m = static_cast<std::int64_t>(pl.size());
    std::unordered_map<std::int64_t, int> index;
    std::vector<std::pair<int, int>> pairs;
    std::deque<int> queue;
    auto add = [&](int i, int j) -> int {
        std::int64_t k = i * m + j;
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        if (pairs.size() >= state_cap) throw StateCapExceeded(state_cap);
        int id = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
        index.emplace(k, id);
        queue.push_back(id);
        return id;
    };
    lts.initial = add(tl.initial, pl.initial);
    struct Pending {
        Action act;
        Rational reward;
        int i, j;
    };
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        auto [i, j] = pairs[s];
        std::vector<Pending> moves;
        for (int ti : tl.out[i]) {
            const auto& a = tl.transitions[ti];
            moves.push_back({a.act, a.reward, a.dst, j});
            if (!a.act.visible()) continue;
            for (int pi : pl.out[j]) {
                const auto& b = pl.transitions[pi];
                if (b.act == a.act.complement()) moves.push_back({Action::tau(), a.reward + b.reward, a.dst, b.dst});
            }
        }
        for (int pi : pl.out[j]) {
            const auto& b = pl.transitions[pi];
            moves.push_back({b.act, b.reward, i, b.dst});
        }
        std::sort(moves.begin(), moves.end(), [](const Pending& x, const Pending& y) {
            if (x.act != y.act) return x.act < y.act;
            if (x.reward != y.reward) return x.reward < y.reward;
            return std::pair(x.i, x.j) < std::pair(y.i, y.j);
        });
        moves.erase(std::unique(moves.begin(), moves.end(),
                                [](const Pending& x, const Pending& y) {
                                    return x.act == y.act && x.reward == y.reward && x.i == y.i && x.j == y.j;
                                }),
                    moves.end());
        for (auto& mv : moves) lts.transitions.push_back({s, mv.act, mv.reward, add(mv.i, mv.j)});
    }
    lts.states.reserve(pairs.size());
    lts.converges.resize(pairs.size());
    for (std::size_t s = 0; s < pairs.size(); ++s) {
        auto [i, j] = pairs[s];
        lts.states.push_back(par(tl.states[i], pl.states[j]));
        lts.converges[s] = tl.converges[i] && pl.converges[j];
    }
    compute_flags(lts);
    return lts;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r;
}

}  // namespace

std::string to_dot(const Lts& lts) {
    std::ostringstream os;
    os << "digraph lts {\n";
    os << "  init [shape=point];\n";
    for (std::size_t i = 0; i < lts.size(); ++i) {
        os << "  s" << i << " [label=\"" << i << "\", tooltip=\"" << dot_escape(lts.states[i]->key) << "\"";
        if (lts.diverges[i]) os << ", style=dashed";
        os << "];\n";
    }
    os << "  init -> s" << lts.initial << ";\n";
    for (auto& t : lts.transitions) {
        std::string label = t.act.str();
        if (t.reward != Rational{0}) label += "[" + to_string(t.reward) + "]";
        os << "  s" << t.src << " -> s" << t.dst << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rewardtest
