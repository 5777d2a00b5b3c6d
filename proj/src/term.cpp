#include "rewardtest/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rewardtest {

Action Action::complement() const {
    switch (kind) {
        case Kind::Name: return coname(base);
        case Kind::Coname: return name(base);
        default: return *this;
    }
}

std::string Action::str() const {
    switch (kind) {
        case Kind::Tau: return "tau";
        case Kind::Omega: return "omega";
        case Kind::Name: return base;
        default: return "'" + base;
    }
}

bool operator<(const Action& a, const Action& b) {
    bool va = a.visible(), vb = b.visible();
    if (va != vb) return vb;
    if (!va) return a.kind < b.kind;
    if (a.base != b.base) return a.base < b.base;
    return a.kind < b.kind;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "eps";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w[i].str();
    }
    return s;
}

namespace {

int level(const TermNode& n) {
    switch (n.kind) {
        case TermKind::Choice: return n.kids.empty() ? 4 : 0;
        case TermKind::Par: return 1;
        case TermKind::Restrict:
        case TermKind::Relabel: return 2;
        case TermKind::Prefix: return 3;
        default: return 4;
    }
}

std::string wrap(const Term& t, int min_level) {
    if (level(*t) < min_level) return "(" + t->key + ")";
    return t->key;
}

Term finish(TermNode n) {
    std::string k;
    switch (n.kind) {
        case TermKind::Prefix:
            k = n.act.str();
            if (n.reward != Rational{0}) k += "[" + to_string(n.reward) + "]";
            if (!n.body()->is_nil()) k += "." + wrap(n.body(), 3);
            break;
        case TermKind::Choice:
            if (n.kids.empty()) {
                k = "0";
            } else {
                for (std::size_t i = 0; i < n.kids.size(); ++i) {
                    if (i) k += " + ";
                    k += wrap(n.kids[i], 1);
                }
            }
            break;
        case TermKind::Par: k = wrap(n.kids[0], 1) + " | " + wrap(n.kids[1], 2); break;
        case TermKind::Restrict:
            k = wrap(n.body(), 2) + " \\ {";
            for (std::size_t i = 0; i < n.names.size(); ++i) k += (i ? "," : "") + n.names[i];
            k += "}";
            break;
        case TermKind::Relabel:
            k = wrap(n.body(), 2) + "[";
            for (std::size_t i = 0; i < n.relabel.size(); ++i)
                k += (i ? "," : "") + n.relabel[i].second + "/" + n.relabel[i].first;
            k += "]";
            break;
        case TermKind::Var: k = n.var; break;
        case TermKind::Rec:
            k = "rec " + n.var + " { ";
            for (std::size_t i = 0; i < n.defs.size(); ++i) {
                if (i) k += "; ";
                k += n.defs[i].first + " = " + n.defs[i].second->key;
            }
            k += " }";
            break;
    }
    n.hash = std::hash<std::string>{}(k);
    n.key = std::move(k);
    return std::make_shared<const TermNode>(std::move(n));
}

TermNode node(TermKind k) {
    TermNode n;
    n.kind = k;
    return n;
}

}  // namespace

Term nil() {
    static const Term z = finish(node(TermKind::Choice));
    return z;
}

Term prefix(Action a, Rational reward, Term body) {
    if (a.is_omega() && reward != Rational{0}) throw std::invalid_argument("omega cannot carry a reward");
    TermNode n = node(TermKind::Prefix);
    n.act = std::move(a);
    n.reward = reward;
    n.kids.push_back(std::move(body));
    return finish(std::move(n));
}

Term prefix(Action a, Term body) { return prefix(std::move(a), Rational(0), std::move(body)); }

Term choice(std::vector<Term> branches) {
    std::vector<Term> flat;
    for (auto& b : branches) {
        if (b->kind == TermKind::Choice) {
            flat.insert(flat.end(), b->kids.begin(), b->kids.end());
        } else {
            flat.push_back(b);
        }
    }
    std::sort(flat.begin(), flat.end(), [](const Term& a, const Term& b) { return a->key < b->key; });
    flat.erase(std::unique(flat.begin(), flat.end(), [](const Term& a, const Term& b) { return same(a, b); }),
               flat.end());
    if (flat.size() == 1) return flat.front();
    if (flat.empty()) return nil();
    TermNode n = node(TermKind::Choice);
    n.kids = std::move(flat);
    return finish(std::move(n));
}

Term choice(Term a, Term b) { return choice(std::vector<Term>{std::move(a), std::move(b)}); }

Term par(Term l, Term r) {
    TermNode n = node(TermKind::Par);
    n.kids = {std::move(l), std::move(r)};
    return finish(std::move(n));
}

Term restrict(Term body, std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.empty()) return body;
    TermNode n = node(TermKind::Restrict);
    n.kids.push_back(std::move(body));
    n.names = std::move(names);
    return finish(std::move(n));
}

Term relabel(Term body, std::vector<std::pair<std::string, std::string>> map) {
    std::sort(map.begin(), map.end());
    std::vector<std::pair<std::string, std::string>> kept;
    for (auto& [from, to] : map) {
        if (from == to) continue;
        if (!kept.empty() && kept.back().first == from) {
            if (kept.back().second != to) throw std::invalid_argument("relabelling maps " + from + " twice");
            continue;
        }
        kept.emplace_back(from, to);
    }
    if (kept.empty()) return body;
    TermNode n = node(TermKind::Relabel);
    n.kids.push_back(std::move(body));
    n.relabel = std::move(kept);
    return finish(std::move(n));
}

Term var(std::string name) {
    TermNode n = node(TermKind::Var);
    n.var = std::move(name);
    return finish(std::move(n));
}

Term rec(std::string head, std::vector<std::pair<std::string, Term>> defs) {
    std::sort(defs.begin(), defs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < defs.size(); ++i)
        if (defs[i].first == defs[i - 1].first) throw std::invalid_argument("variable defined twice: " + defs[i].first);
    bool found = std::any_of(defs.begin(), defs.end(), [&](const auto& d) { return d.first == head; });
    if (!found) throw std::invalid_argument("recursion head " + head + " has no equation");
    TermNode n = node(TermKind::Rec);
    n.var = std::move(head);
    n.defs = std::move(defs);
    return finish(std::move(n));
}

Term delta(const Term& p) {
    auto used = all_vars(p);
    std::string x = "D";
    for (int i = 1; used.count(x); ++i) x = "D" + std::to_string(i);
    return rec(x, {{x, choice(prefix(Action::tau(), var(x)), p)}});
}

Term omega_process() { return delta(nil()); }

const std::string& print(const Term& t) { return t->key; }

namespace {

void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (t->kind) {
        case TermKind::Var:
            if (!bound.count(t->var)) out.insert(t->var);
            return;
        case TermKind::Rec: {
            std::vector<std::string> added;
            for (auto& [x, _] : t->defs)
                if (bound.insert(x).second) added.push_back(x);
            for (auto& [_, b] : t->defs) collect_free(b, bound, out);
            for (auto& x : added) bound.erase(x);
            return;
        }
        default:
            for (auto& k : t->kids) collect_free(k, bound, out);
    }
}

void collect_all(const Term& t, std::set<std::string>& out) {
    if (t->kind == TermKind::Var) out.insert(t->var);
    for (auto& [x, b] : t->defs) {
        out.insert(x);
        collect_all(b, out);
    }
    for (auto& k : t->kids) collect_all(k, out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
    std::set<std::string> bound, out;
    collect_free(t, bound, out);
    return out;
}

std::set<std::string> all_vars(const Term& t) {
    std::set<std::string> out;
    collect_all(t, out);
    return out;
}

bool closed(const Term& t) { return free_vars(t).empty(); }

namespace {

/** Rebuilds t with children mapped through f; returns t itself when nothing changed. */
template <class F>
Term rebuild(const Term& t, F&& f) {
    switch (t->kind) {
        case TermKind::Prefix: {
            Term b = f(t->body());
            return b == t->body() ? t : prefix(t->act, t->reward, b);
        }
        case TermKind::Choice: {
            bool changed = false;
            std::vector<Term> ks;
            ks.reserve(t->kids.size());
            for (auto& k : t->kids) {
                ks.push_back(f(k));
                changed |= ks.back() != k;
            }
            return changed ? choice(std::move(ks)) : t;
        }
        case TermKind::Par: {
            Term l = f(t->kids[0]), r = f(t->kids[1]);
            return (l == t->kids[0] && r == t->kids[1]) ? t : par(l, r);
        }
        case TermKind::Restrict: {
            Term b = f(t->body());
            return b == t->body() ? t : restrict(b, t->names);
        }
        case TermKind::Relabel: {
            Term b = f(t->body());
            return b == t->body() ? t : relabel(b, t->relabel);
        }
        default: return t;
    }
}

Term subst_rec(const Term& t, const std::map<std::string, Term>& sub) {
    if (sub.empty()) return t;
    if (t->kind == TermKind::Var) {
        auto it = sub.find(t->var);
        return it == sub.end() ? t : it->second;
    }
    if (t->kind == TermKind::Rec) {
        std::map<std::string, Term> inner = sub;
        for (auto& [x, _] : t->defs) inner.erase(x);
        if (inner.empty()) return t;
        bool changed = false;
        std::vector<std::pair<std::string, Term>> defs;
        for (auto& [x, b] : t->defs) {
            defs.emplace_back(x, subst_rec(b, inner));
            changed |= defs.back().second != b;
        }
        return changed ? rec(t->var, std::move(defs)) : t;
    }
    return rebuild(t, [&](const Term& k) { return subst_rec(k, sub); });
}

}  // namespace

Term substitute(const Term& t, const std::map<std::string, Term>& sub) { return subst_rec(t, sub); }

Term substitute_action(const Term& t, const std::string& from, const Action& to) {
    std::function<Term(const Term&)> go = [&](const Term& u) -> Term {
        if (u->kind == TermKind::Prefix) {
            Action a = u->act;
            if (a.visible() && a.base == from) {
                if (to.visible()) {
                    a = a.kind == Action::Kind::Name ? to : to.complement();
                } else {
                    a = to;
                }
            }
            return prefix(a, u->reward, go(u->body()));
        }
        if (u->kind == TermKind::Rec) {
            std::vector<std::pair<std::string, Term>> defs;
            for (auto& [x, b] : u->defs) defs.emplace_back(x, go(b));
            return rec(u->var, std::move(defs));
        }
        return rebuild(u, go);
    };
    return go(t);
}

Term unfold(const Term& r) {
    if (r->kind != TermKind::Rec) throw std::invalid_argument("unfold: not a recursion");
    std::map<std::string, Term> sub;
    Term body;
    for (auto& [x, b] : r->defs) {
        sub[x] = x == r->var ? r : rec(x, r->defs);
        if (x == r->var) body = b;
    }
    return substitute(body, sub);
}

std::set<std::string> names_of(const Term& t) {
    std::set<std::string> out;
    std::function<void(const Term&)> go = [&](const Term& u) {
        if (u->kind == TermKind::Prefix && u->act.visible()) out.insert(u->act.base);
        for (auto& n : u->names) out.insert(n);
        for (auto& [a, b] : u->relabel) {
            out.insert(a);
            out.insert(b);
        }
        for (auto& [_, b] : u->defs) go(b);
        for (auto& k : u->kids) go(k);
    };
    go(t);
    return out;
}

namespace {

bool any_prefix(const Term& t, const std::function<bool(const TermNode&)>& pred) {
    if (t->kind == TermKind::Prefix && pred(*t)) return true;
    for (auto& [_, b] : t->defs)
        if (any_prefix(b, pred)) return true;
    for (auto& k : t->kids)
        if (any_prefix(k, pred)) return true;
    return false;
}

}  // namespace

bool has_omega(const Term& t) {
    return any_prefix(t, [](const TermNode& n) { return n.act.is_omega(); });
}

bool has_rewards(const Term& t) {
    return any_prefix(t, [](const TermNode& n) { return n.reward != Rational{0}; });
}

bool is_plain(const Term& t) { return !has_omega(t) && !has_rewards(t); }

Term negate_rewards(const Term& t) {
    std::function<Term(const Term&)> go = [&](const Term& u) -> Term {
        if (u->kind == TermKind::Prefix) return prefix(u->act, -u->reward, go(u->body()));
        if (u->kind == TermKind::Rec) {
            std::vector<std::pair<std::string, Term>> defs;
            for (auto& [x, b] : u->defs) defs.emplace_back(x, go(b));
            return rec(u->var, std::move(defs));
        }
        return rebuild(u, go);
    };
    return go(t);
}

}  // namespace rewardtest
