#include "rewardtest/properties.hpp"

#include "rewardtest/graph.hpp"
#include "rewardtest/reward.hpp"
#include "rewardtest/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace rewardtest {

struct WordSet::Node {
    enum class Kind { Letter, Eps, None, Concat, Alt, Star } kind;
    Action letter;
    std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodePtr = std::shared_ptr<const WordSet::Node>;
using NK = WordSet::Node::Kind;

NodePtr mk(NK k, std::vector<NodePtr> kids = {}, Action a = {}) {
    auto n = std::make_shared<WordSet::Node>();
    n->kind = k;
    n->kids = std::move(kids);
    n->letter = std::move(a);
    return n;
}

class RegexParser {
public:
    explicit RegexParser(const std::string& s) : s_(s) {}

    NodePtr run() {
        NodePtr r = alt();
        skip();
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& m) const {
        throw RegexError("regex: " + m + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool atom_start() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return c == '(' || c == '\'' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    NodePtr alt() {
        std::vector<NodePtr> parts{concat()};
        while (peek('|')) {
            ++i_;
            parts.push_back(concat());
        }
        return parts.size() == 1 ? parts[0] : mk(NK::Alt, parts);
    }
    NodePtr concat() {
        std::vector<NodePtr> parts;
        while (atom_start()) parts.push_back(postfix());
        if (parts.empty()) fail("expected a word expression");
        return parts.size() == 1 ? parts[0] : mk(NK::Concat, parts);
    }
    NodePtr postfix() {
        NodePtr a = atom();
        for (;;) {
            if (peek('*')) {
                ++i_;
                a = mk(NK::Star, {a});
            } else if (peek('+')) {
                ++i_;
                a = mk(NK::Concat, {a, mk(NK::Star, {a})});
            } else if (peek('?')) {
                ++i_;
                a = mk(NK::Alt, {a, mk(NK::Eps)});
            } else {
                return a;
            }
        }
    }
    std::string ident() {
        std::size_t b = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (b == i_) fail("expected an action name");
        return s_.substr(b, i_ - b);
    }
    NodePtr atom() {
        skip();
        if (s_[i_] == '(') {
            ++i_;
            NodePtr r = alt();
            if (!peek(')')) fail("expected ')'");
            ++i_;
            return r;
        }
        bool co = false;
        if (s_[i_] == '\'') {
            co = true;
            ++i_;
        }
        std::string id = ident();
        if (!co && id == "eps") return mk(NK::Eps);
        if (!co && id == "none") return mk(NK::None);
        if (id == "tau" || id == "omega") fail(id + " is not observable");
        return mk(NK::Letter, {}, co ? Action::coname(id) : Action::name(id));
    }
};

void collect_names(const NodePtr& n, std::set<std::string>& out) {
    if (n->kind == NK::Letter) out.insert(n->letter.base);
    for (auto& k : n->kids) collect_names(k, out);
}

/** Thompson construction; returns (entry, exit). */
std::pair<int, int> build(const NodePtr& n, const Alphabet& alpha, Nfa& a) {
    int in = a.add_state(), out = a.add_state();
    switch (n->kind) {
        case NK::Letter: {
            int l = alpha.index(n->letter);
            if (l < 0) throw RegexError("letter " + n->letter.str() + " outside the alphabet");
            a.add_edge(in, l, out);
            break;
        }
        case NK::Eps: a.add_edge(in, -1, out); break;
        case NK::None: break;
        case NK::Concat: {
            int cur = in;
            for (auto& k : n->kids) {
                auto [ki, ko] = build(k, alpha, a);
                a.add_edge(cur, -1, ki);
                cur = ko;
            }
            a.add_edge(cur, -1, out);
            break;
        }
        case NK::Alt:
            for (auto& k : n->kids) {
                auto [ki, ko] = build(k, alpha, a);
                a.add_edge(in, -1, ki);
                a.add_edge(ko, -1, out);
            }
            break;
        case NK::Star: {
            auto [ki, ko] = build(n->kids[0], alpha, a);
            a.add_edge(in, -1, out);
            a.add_edge(in, -1, ki);
            a.add_edge(ko, -1, ki);
            a.add_edge(ko, -1, out);
            break;
        }
    }
    return {in, out};
}

}  // namespace

WordSet WordSet::parse(const std::string& regex) {
    WordSet w;
    w.root_ = RegexParser(regex).run();
    w.text_ = regex;
    return w;
}

WordSet WordSet::words(const std::vector<Word>& ws) {
    WordSet w;
    std::vector<NodePtr> alts;
    std::string text;
    for (auto& word : ws) {
        std::vector<NodePtr> letters;
        for (auto& a : word) letters.push_back(mk(NK::Letter, {}, a));
        alts.push_back(letters.empty() ? mk(NK::Eps) : mk(NK::Concat, letters));
        if (!text.empty()) text += " | ";
        text += word.empty() ? "eps" : word_str(word);
    }
    w.root_ = alts.empty() ? mk(NK::None) : mk(NK::Alt, alts);
    w.text_ = text.empty() ? "none" : text;
    return w;
}

WordSet WordSet::empty() { return words({}); }

std::set<std::string> WordSet::names() const {
    std::set<std::string> out;
    collect_names(root_, out);
    return out;
}

Dfa WordSet::dfa(const Alphabet& alpha) const {
    Nfa a;
    auto [in, out] = build(root_, alpha, a);
    a.start = {in};
    a.accept[out] = true;
    return determinize(a, alpha.size());
}

std::string PropertyResult::str() const {
    switch (kind) {
        case Kind::None: return holds ? "holds" : "violated";
        case Kind::Trace: return "trace " + word_str(trace);
        case Kind::Deadlock: return "deadlock trace " + word_str(trace);
        case Kind::Divergence: return "divergence trace " + word_str(trace);
        case Kind::Lasso: return "infinite trace " + lasso.str();
    }
    return "";
}

namespace {

struct Product {
    struct Node {
        int s;
        std::vector<int> d;
    };
    std::vector<Node> nodes;
    std::vector<std::vector<std::pair<int, int>>> out;  // (letter or -1, target)
    std::vector<int> parent, parent_letter;

    Word trace(const Alphabet& alpha, int v) const {
        std::vector<int> ls;
        for (; parent[v] >= 0; v = parent[v])
            if (parent_letter[v] >= 0) ls.push_back(parent_letter[v]);
        std::reverse(ls.begin(), ls.end());
        return word_of(alpha, ls);
    }
};

template <class Stop>
Product build_product(const ObservationSemantics& sem, const std::vector<const Dfa*>& dfas, Stop stop) {
    const Lts& lts = *sem.lts;
    Product pr;
    std::map<std::pair<int, std::vector<int>>, int> index;
    auto add = [&](int s, std::vector<int> d, int par, int letter) {
        auto key = std::pair(s, d);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(pr.nodes.size());
        index.emplace(key, id);
        pr.nodes.push_back({s, std::move(d)});
        pr.out.emplace_back();
        pr.parent.push_back(par);
        pr.parent_letter.push_back(letter);
        return id;
    };
    add(lts.initial, std::vector<int>(dfas.size(), 0), -1, -1);
    for (std::size_t k = 0; k < pr.nodes.size(); ++k) {
        auto node = pr.nodes[k];
        if (stop(node.d)) continue;
        for (int ti : lts.out[node.s]) {
            auto& t = lts.transitions[ti];
            int letter = -1;
            std::vector<int> d = node.d;
            if (t.act.visible()) {
                letter = sem.alpha.index(t.act);
                for (std::size_t i = 0; i < dfas.size(); ++i) d[i] = dfas[i]->delta[d[i]][letter];
            }
            int to = add(t.dst, std::move(d), static_cast<int>(k), letter);
            pr.out[k].emplace_back(letter, to);
        }
    }
    return pr;
}

/** A reachable cycle with a visible step inside an SCC that satisfies `want`, as a lasso. */
template <class Want>
std::optional<Lasso> find_visible_cycle(const Product& pr, const Alphabet& alpha, Want want) {
    const int n = static_cast<int>(pr.nodes.size());
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        for (auto [l, t] : pr.out[v]) adj[v].push_back(t);
    Scc scc = strongly_connected(adj);
    for (int v = 0; v < n; ++v) {
        int c = scc.comp[v];
        for (auto [l, t] : pr.out[v]) {
            if (l < 0 || scc.comp[t] != c || !want(c, scc)) continue;
            // path t -> v inside the component closes the cycle through edge v -l-> t
            std::vector<int> via(n, -2);
            std::vector<int> via_letter(n, -1);
            via[t] = -1;
            std::deque<int> q{t};
            while (!q.empty() && via[v] == -2) {
                int u = q.front();
                q.pop_front();
                for (auto [l2, w] : pr.out[u]) {
                    if (scc.comp[w] != c || via[w] != -2) continue;
                    via[w] = u;
                    via_letter[w] = l2;
                    q.push_back(w);
                }
            }
            if (via[v] == -2 && v != t) continue;
            std::vector<int> back;
            for (int u = v; u != t && via[u] >= 0; u = via[u])
                if (via_letter[u] >= 0) back.push_back(via_letter[u]);
            std::reverse(back.begin(), back.end());
            Lasso lasso;
            lasso.stem = pr.trace(alpha, v);
            lasso.cycle.push_back(alpha[l]);
            for (int b : back) lasso.cycle.push_back(alpha[b]);
            return lasso;
        }
    }
    return std::nullopt;
}

struct Setup {
    std::shared_ptr<const Lts> lts;
    ObservationSemantics sem;
};

Setup setup(const Term& p, const std::set<std::string>& extra, const PropertyOptions& opts) {
    auto names = alphabet({p});
    names.insert(extra.begin(), extra.end());
    Setup s;
    s.lts = explore_for_analysis(p, opts.mode, opts.state_cap);
    s.sem = build_observations(s.lts, Alphabet(names));
    return s;
}

/** Deadlock or divergence at an unstopped product node satisfying `bad`. */
template <class Bad>
std::optional<PropertyResult> finite_violation(const Product& pr, const ObservationSemantics& sem, Bad bad) {
    for (std::size_t v = 0; v < pr.nodes.size(); ++v) {
        int s = pr.nodes[v].s;
        if (!bad(pr.nodes[v].d)) continue;
        PropertyResult r;
        r.holds = false;
        if (sem.lts->out[s].empty()) {
            r.kind = PropertyResult::Kind::Deadlock;
        } else if (sem.divergent.test(s)) {
            r.kind = PropertyResult::Kind::Divergence;
        } else {
            continue;
        }
        r.trace = pr.trace(sem.alpha, static_cast<int>(v));
        return r;
    }
    return std::nullopt;
}

PropertyResult lasso_result(const Lasso& l) {
    PropertyResult r;
    r.holds = false;
    r.kind = PropertyResult::Kind::Lasso;
    r.lasso = l;
    return r;
}

}  // namespace

PropertyResult check_safety(const Term& p, const WordSet& bad, const PropertyOptions& opts) {
    auto st = setup(p, bad.names(), opts);
    Dfa b = bad.dfa(st.sem.alpha);
    auto pr = build_product(st.sem, {&b}, [&](const std::vector<int>& d) { return b.accept[d[0]]; });
    // nodes are numbered breadth first, so the first accepting one has a shortest trace
    for (std::size_t v = 0; v < pr.nodes.size(); ++v)
        if (b.accept[pr.nodes[v].d[0]]) {
            PropertyResult r;
            r.holds = false;
            r.kind = PropertyResult::Kind::Trace;
            r.trace = pr.trace(st.sem.alpha, static_cast<int>(v));
            return r;
        }
    return {};
}

PropertyResult check_liveness(const Term& p, const WordSet& good, const PropertyOptions& opts) {
    auto st = setup(p, good.names(), opts);
    Dfa g = good.dfa(st.sem.alpha);
    auto done = [&](const std::vector<int>& d) { return bool(g.accept[d[0]]); };
    auto pr = build_product(st.sem, {&g}, done);
    if (auto r = finite_violation(pr, st.sem, [&](const std::vector<int>& d) { return !done(d); })) return *r;
    if (auto l = find_visible_cycle(pr, st.sem.alpha, [](int, const Scc&) { return true; })) return lasso_result(*l);
    return {};
}

PropertyResult check_cond_liveness(const Term& p, const WordSet& cond, const WordSet& good,
                                   const PropertyOptions& opts) {
    auto names = cond.names();
    auto gn = good.names();
    names.insert(gn.begin(), gn.end());
    auto st = setup(p, names, opts);
    Dfa c = extension_closure(cond.dfa(st.sem.alpha));
    Dfa g = good.dfa(st.sem.alpha);
    auto pr = build_product(st.sem, {&c, &g}, [&](const std::vector<int>& d) { return bool(g.accept[d[1]]); });
    auto bad = [&](const std::vector<int>& d) { return c.accept[d[0]] && !g.accept[d[1]]; };
    if (auto r = finite_violation(pr, st.sem, bad)) return *r;
    // The condition state is constant on a component since accepting states of c are absorbing.
    auto l = find_visible_cycle(pr, st.sem.alpha, [&](int comp, const Scc& scc) {
        for (std::size_t v = 0; v < pr.nodes.size(); ++v)
            if (scc.comp[v] == comp) return bad(pr.nodes[v].d);
        return false;
    });
    if (l) return lasso_result(*l);
    return {};
}

namespace {

Dfa universal(const Alphabet& alpha, bool accept) {
    Dfa d;
    d.letters = alpha.size();
    d.delta.assign(1, std::vector<int>(alpha.size(), 0));
    d.accept = {accept};
    return d;
}

}  // namespace

LtProperty lt_everything() {
    LtProperty phi;
    phi.finite = [](const Alphabet& a) { return universal(a, true); };
    phi.infinite = [](const Alphabet& a) { return universal(a, true); };
    return phi;
}

LtProperty lt_finite_only(const WordSet& fin) {
    LtProperty phi;
    phi.finite = [fin](const Alphabet& a) { return fin.dfa(a); };
    phi.infinite = [](const Alphabet& a) { return universal(a, false); };
    phi.names = fin.names();
    return phi;
}

LtProperty lt_lassos(const WordSet& fin, const std::vector<Lasso>& lassos) {
    LtProperty phi;
    phi.finite = [fin](const Alphabet& a) { return fin.dfa(a); };
    phi.infinite = [lassos](const Alphabet& a) {
        // Tracks which lasso positions are still consistent with the word read so far.
        Nfa n;
        for (auto& l : lassos) {
            if (l.cycle.empty()) throw std::invalid_argument("lasso with an empty cycle");
            Word all = l.stem;
            all.insert(all.end(), l.cycle.begin(), l.cycle.end());
            int base = n.states;
            for (std::size_t i = 0; i < all.size(); ++i) n.add_state(true);
            n.start.push_back(base);
            for (std::size_t i = 0; i < all.size(); ++i) {
                int letter = a.index(all[i]);
                if (letter < 0) throw RegexError("letter " + all[i].str() + " outside the alphabet");
                int next = i + 1 == all.size() ? static_cast<int>(l.stem.size()) : static_cast<int>(i + 1);
                n.add_edge(base + static_cast<int>(i), letter, base + next);
            }
        }
        return determinize(n, a.size());
    };
    phi.names = fin.names();
    for (auto& l : lassos) {
        for (auto& x : l.stem) phi.names.insert(x.base);
        for (auto& x : l.cycle) phi.names.insert(x.base);
    }
    return phi;
}

LtProperty lt_liveness(const WordSet& good) {
    LtProperty phi;
    auto f = [good](const Alphabet& a) { return extension_closure(good.dfa(a)); };
    phi.finite = f;
    phi.infinite = f;
    phi.names = good.names();
    return phi;
}

LtProperty lt_safety(const WordSet& bad) {
    LtProperty phi;
    auto f = [bad](const Alphabet& a) { return complement(extension_closure(bad.dfa(a))); };
    phi.finite = f;
    phi.infinite = f;
    phi.names = bad.names();
    return phi;
}

LtProperty lt_cond_liveness(const WordSet& cond, const WordSet& good) {
    LtProperty phi;
    auto f = [cond, good](const Alphabet& a) {
        return dfa_product(extension_closure(good.dfa(a)), complement(extension_closure(cond.dfa(a))), false);
    };
    phi.finite = f;
    phi.infinite = f;
    phi.names = cond.names();
    auto gn = good.names();
    phi.names.insert(gn.begin(), gn.end());
    return phi;
}

bool check_lt(const Term& p, const LtProperty& phi, const PropertyOptions& opts) {
    auto st = setup(p, phi.names, opts);
    Dfa fin = phi.finite(st.sem.alpha);
    Dfa inf = phi.infinite(st.sem.alpha);
    auto pr = build_product(st.sem, {&fin, &inf}, [](const std::vector<int>&) { return false; });
    if (finite_violation(pr, st.sem, [&](const std::vector<int>& d) { return !fin.accept[d[0]]; })) return false;
    auto l = find_visible_cycle(pr, st.sem.alpha, [&](int comp, const Scc& scc) {
        for (std::size_t v = 0; v < pr.nodes.size(); ++v)
            if (scc.comp[v] == comp && !inf.accept[pr.nodes[v].d[1]]) return true;
        return false;
    });
    return !l;
}

std::string to_string(PropertyKind k) {
    switch (k) {
        case PropertyKind::Liveness: return "liveness";
        case PropertyKind::Safety: return "safety";
        case PropertyKind::CondLiveness: return "conditional-liveness";
    }
    return "";
}

PropertyTest property_to_test(PropertyKind kind, const std::vector<WordSet>& specs,
                              const std::set<std::string>& extra_names) {
    std::set<std::string> names = extra_names;
    for (auto& s : specs) {
        auto n = s.names();
        names.insert(n.begin(), n.end());
    }
    Alphabet alpha(names);
    auto offer = [&](std::size_t l, Rational r, Term body) { return prefix(alpha[l].complement(), r, body); };
    if (kind == PropertyKind::CondLiveness) {
        if (specs.size() != 2) throw std::invalid_argument("conditional liveness needs a condition and a goal");
        Dfa c = extension_closure(specs[0].dfa(alpha));
        Dfa g = specs[1].dfa(alpha);
        if (g.accept[0]) return {nil(), Rational{0}, false};
        if (c.accept[0]) throw std::invalid_argument("condition set contains the empty word and the goal does not");
        auto cp = c.productive();
        auto gp = g.productive();
        auto name = [](int x, int y) { return "S" + std::to_string(x) + "_" + std::to_string(y); };
        std::map<std::pair<int, int>, bool> seen;
        std::deque<std::pair<int, int>> queue{{0, 0}};
        seen[{0, 0}] = true;
        std::vector<std::pair<std::string, Term>> defs;
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            std::vector<Term> branches;
            for (std::size_t l = 0; l < alpha.size(); ++l) {
                int x2 = c.delta[x][l], y2 = g.delta[y][l];
                bool was = c.accept[x], done = c.accept[x2];
                Rational r = done && !was ? Rational{-1} : Rational{0};
                if (g.accept[y2]) {
                    branches.push_back(offer(l, r + (done ? Rational{1} : Rational{0}), nil()));
                } else if ((!done && !cp[x2]) || (done && !gp[y2])) {
                    // Settled either way: observe the move and stop. Refusing it instead would
                    // steer the computation into the other branches of the process.
                    branches.push_back(offer(l, r, nil()));
                } else {
                    branches.push_back(offer(l, r, var(name(x2, y2))));
                    if (!seen[{x2, y2}]) {
                        seen[{x2, y2}] = true;
                        queue.emplace_back(x2, y2);
                    }
                }
            }
            defs.emplace_back(name(x, y), choice(std::move(branches)));
        }
        return {rec(name(0, 0), std::move(defs)), Rational{0}, false};
    }
    if (specs.size() != 1) throw std::invalid_argument(to_string(kind) + " needs one word set");
    Dfa d = specs[0].dfa(alpha);
    if (d.accept[0]) throw std::invalid_argument(to_string(kind) + " set contains the empty word");
    auto prod = d.productive();
    const bool live = kind == PropertyKind::Liveness;
    const Rational hit = live ? Rational{1} : Rational{-1};
    auto name = [](int x) { return "S" + std::to_string(x); };
    std::vector<bool> seen(d.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    std::vector<std::pair<std::string, Term>> defs;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        std::vector<Term> branches;
        for (std::size_t l = 0; l < alpha.size(); ++l) {
            int y = d.delta[x][l];
            if (d.accept[y]) {
                branches.push_back(offer(l, hit, nil()));
            } else if (prod[y]) {
                branches.push_back(offer(l, Rational{0}, var(name(y))));
                if (!seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            } else {
                branches.push_back(offer(l, Rational{0}, nil()));
            }
        }
        defs.emplace_back(name(x), choice(std::move(branches)));
    }
    return {rec(name(0), std::move(defs)), Rational{0}, live};
}

std::vector<NamedProperty> parse_property_file(const std::string& text) {
    std::map<std::string, WordSet> sets;
    std::vector<std::string> order;
    std::vector<NamedProperty> props;
    bool directives = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto need = [&](const std::string& n) -> const WordSet& {
        auto it = sets.find(n);
        if (it == sets.end()) throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown set " + n);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto c = line.find("--");
        if (c != std::string::npos) line.resize(c);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto eq = line.find('=');
        if (eq != std::string::npos) {
            std::string name = line.substr(0, eq);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing name");
            if (!sets.count(name)) order.push_back(name);
            sets.insert_or_assign(name, WordSet::parse(line.substr(eq + 1)));
            continue;
        }
        directives = true;
        std::string a, b;
        if (first == "liveness" && ls >> a) {
            props.push_back({a, PropertyKind::Liveness, {need(a)}});
        } else if (first == "safety" && ls >> a) {
            props.push_back({a, PropertyKind::Safety, {need(a)}});
        } else if (first == "cond" && ls >> a >> b) {
            props.push_back({a + "=>" + b, PropertyKind::CondLiveness, {need(a), need(b)}});
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": cannot read \"" + line + "\"");
        }
    }
    if (directives) return props;
    for (auto& n : order) {
        if (n[0] == 'G') props.push_back({n, PropertyKind::Liveness, {sets.at(n)}});
        if (n[0] == 'B') props.push_back({n, PropertyKind::Safety, {sets.at(n)}});
        if (n[0] == 'C' && n.size() > 1 && sets.count("G" + n.substr(1)))
            props.push_back({n + "=>G" + n.substr(1), PropertyKind::CondLiveness, {sets.at(n), sets.at("G" + n.substr(1))}});
    }
    return props;
}

PropertyResult check_property(const Term& p, const NamedProperty& prop, const PropertyOptions& opts) {
    switch (prop.kind) {
        case PropertyKind::Liveness: return check_liveness(p, prop.specs.at(0), opts);
        case PropertyKind::Safety: return check_safety(p, prop.specs.at(0), opts);
        case PropertyKind::CondLiveness: return check_cond_liveness(p, prop.specs.at(0), prop.specs.at(1), opts);
    }
    return {};
}

}  // namespace rewardtest
