#include "rewardtest/automata.hpp"

#include "rewardtest/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace rewardtest {

Alphabet::Alphabet(const std::set<std::string>& names) {
    for (auto& n : names) {
        letters_.push_back(Action::name(n));
        letters_.push_back(Action::coname(n));
    }
    std::sort(letters_.begin(), letters_.end());
}

Alphabet::Alphabet(std::vector<Action> letters) : letters_(std::move(letters)) {
    for (auto& a : letters_)
        if (!a.visible()) throw std::invalid_argument("alphabet letters must be visible actions");
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

int Alphabet::index(const Action& a) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
    if (it == letters_.end() || *it != a) return -1;
    return static_cast<int>(it - letters_.begin());
}

std::string Alphabet::key() const {
    std::string k;
    for (auto& a : letters_) k += a.str() + ",";
    return k;
}

int Nfa::add_state(bool accepting) {
    accept.push_back(accepting);
    edges.emplace_back();
    return states++;
}

bool Dfa::accepts(const std::vector<int>& word) const {
    int s = 0;
    for (int l : word) s = delta[s][l];
    return accept[s];
}

std::vector<bool> Dfa::productive() const {
    std::vector<std::vector<int>> adj(delta.size());
    for (std::size_t s = 0; s < delta.size(); ++s) adj[s] = delta[s];
    return can_reach(adj, accept);
}

namespace {

Bits eps_closure(const Nfa& a, Bits set) {
    std::vector<int> stack = set.members();
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (auto [l, t] : a.edges[s])
            if (l < 0 && !set.test(t)) {
                set.set(t);
                stack.push_back(t);
            }
    }
    return set;
}

Bits nfa_step(const Nfa& a, const Bits& set, int letter) {
    Bits out(a.states);
    for (int s : set.members())
        for (auto [l, t] : a.edges[s])
            if (l == letter) out.set(t);
    return eps_closure(a, out);
}

}  // namespace

Dfa determinize(const Nfa& a, std::size_t letters) {
    Dfa d;
    d.letters = letters;
    std::unordered_map<Bits, int, BitsHash> index;
    std::vector<Bits> sets;
    Bits init(a.states);
    for (int s : a.start) init.set(s);
    init = eps_closure(a, init);
    index.emplace(init, 0);
    sets.push_back(init);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        Bits cur = sets[k];
        std::vector<int> row(letters);
        for (std::size_t l = 0; l < letters; ++l) {
            Bits nx = nfa_step(a, cur, static_cast<int>(l));
            auto it = index.find(nx);
            if (it == index.end()) {
                it = index.emplace(nx, static_cast<int>(sets.size())).first;
                sets.push_back(nx);
            }
            row[l] = it->second;
        }
        d.delta.push_back(std::move(row));
    }
    d.accept.resize(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
        bool acc = false;
        for (int s : sets[k].members()) acc |= a.accept[s];
        d.accept[k] = acc;
    }
    return d;
}

Dfa complement(const Dfa& d) {
    Dfa r = d;
    r.accept.flip();
    return r;
}

Dfa extension_closure(const Dfa& d) {
    Dfa r = d;
    for (int s = 0; s < r.size(); ++s)
        if (r.accept[s])
            for (auto& t : r.delta[s]) t = s;
    return r;
}

Dfa antichain(const Dfa& d) {
    // Leaving an accepting state leads to a rejecting sink.
    Dfa r = d;
    int sink = r.size();
    r.delta.emplace_back(r.letters, sink);
    r.accept.push_back(false);
    for (int s = 0; s < sink; ++s)
        if (r.accept[s])
            for (auto& t : r.delta[s]) t = sink;
    return r;
}

Dfa dfa_product(const Dfa& a, const Dfa& b, bool conjunction) {
    if (a.letters != b.letters) throw std::invalid_argument("alphabet mismatch");
    Dfa r;
    r.letters = a.letters;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> pairs{{0, 0}};
    index[{0, 0}] = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [x, y] = pairs[k];
        std::vector<int> row(r.letters);
        for (std::size_t l = 0; l < r.letters; ++l) {
            std::pair<int, int> nx{a.delta[x][l], b.delta[y][l]};
            auto it = index.find(nx);
            if (it == index.end()) {
                it = index.emplace(nx, static_cast<int>(pairs.size())).first;
                pairs.push_back(nx);
            }
            row[l] = it->second;
        }
        r.delta.push_back(std::move(row));
    }
    for (auto [x, y] : pairs) r.accept.push_back(conjunction ? (a.accept[x] && b.accept[y]) : (a.accept[x] || b.accept[y]));
    return r;
}

bool dfa_empty(const Dfa& d) {
    std::vector<std::vector<int>> adj(d.delta.begin(), d.delta.end());
    auto reach = reachable_from(adj, {0});
    for (int s = 0; s < d.size(); ++s)
        if (reach[s] && d.accept[s]) return false;
    return true;
}

bool dfa_equivalent(const Dfa& a, const Dfa& b) {
    Dfa x = dfa_product(a, complement(b), true);
    Dfa y = dfa_product(b, complement(a), true);
    return dfa_empty(x) && dfa_empty(y);
}

InclusionWitness trace_language_included(const Nfa& a, const Nfa& b, std::size_t letters) {
    struct Node {
        int bstate;
        Bits aset;
        int parent;
        int letter;
    };
    std::vector<Node> nodes;
    std::map<std::pair<int, Bits>, int> seen;
    Bits a0(a.states);
    for (int s : a.start) a0.set(s);
    a0 = eps_closure(a, a0);
    std::deque<int> queue;
    // b is explored state by state; its epsilon moves are followed explicitly
    for (int s : b.start) {
        if (seen.count({s, a0})) continue;
        seen[{s, a0}] = static_cast<int>(nodes.size());
        nodes.push_back({s, a0, -1, -1});
        queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
    auto accepted_by_a = [&](const Bits& set) {
        for (int s : set.members())
            if (a.accept[s]) return true;
        return false;
    };
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        Node cur = nodes[k];
        if (b.accept[cur.bstate] && !accepted_by_a(cur.aset)) {
            InclusionWitness w;
            w.included = false;
            for (int i = k; nodes[i].parent >= 0; i = nodes[i].parent)
                if (nodes[i].letter >= 0) w.word.push_back(nodes[i].letter);
            std::reverse(w.word.begin(), w.word.end());
            return w;
        }
        // epsilon moves of b first (same depth), then letters in order
        for (auto [l, t] : b.edges[cur.bstate]) {
            if (l >= 0) continue;
            std::pair<int, Bits> key{t, cur.aset};
            if (seen.count(key)) continue;
            seen[key] = static_cast<int>(nodes.size());
            nodes.push_back({t, cur.aset, k, -1});
            queue.push_front(static_cast<int>(nodes.size()) - 1);
        }
        for (std::size_t l = 0; l < letters; ++l) {
            Bits na = nfa_step(a, cur.aset, static_cast<int>(l));
            for (auto [bl, t] : b.edges[cur.bstate]) {
                if (bl != static_cast<int>(l)) continue;
                std::pair<int, Bits> key{t, na};
                if (seen.count(key)) continue;
                seen[key] = static_cast<int>(nodes.size());
                nodes.push_back({t, na, k, static_cast<int>(l)});
                queue.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
    }
    return {};
}

}  // namespace rewardtest
