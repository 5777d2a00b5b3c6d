#include "rewardtest/axioms.hpp"

#include "rewardtest/parser.hpp"

#include <algorithm>
#include <sstream>

namespace rewardtest {

std::string AxiomSchema::str() const { return lhs_text + (equation ? " == " : " <= ") + rhs_text; }

std::string AxiomInstance::str() const {
    std::string s;
    for (auto& [v, t] : subst) s += (s.empty() ? "" : ", ") + v + " = " + print(t);
    if (uses_alpha) s += (s.empty() ? "" : ", ") + std::string("alpha = ") + alpha.str();
    return s;
}

namespace {

AxiomSchema make(std::string name, std::string lhs, std::string rhs, bool eq) {
    AxiomSchema a;
    a.name = std::move(name);
    a.lhs_text = std::move(lhs);
    a.rhs_text = std::move(rhs);
    a.equation = eq;
    ParseOptions o;
    o.allow_free_vars = true;
    a.lhs = parse(a.lhs_text, o);
    a.rhs = parse(a.rhs_text, o);
    auto v = free_vars(a.lhs);
    auto w = free_vars(a.rhs);
    v.insert(w.begin(), w.end());
    a.vars.assign(v.begin(), v.end());
    auto n = names_of(a.lhs);
    auto m = names_of(a.rhs);
    a.uses_alpha = n.count("alpha") || m.count("alpha");
    return a;
}

}  // namespace

const std::vector<AxiomSchema>& axiom_schemas() {
    static const std::vector<AxiomSchema> all = {
        make("R1", "tau.X + Y", "tau.X + tau.(X + Y)", true),
        make("R2", "alpha.X + tau.(alpha.Y + Z)", "tau.(alpha.X + alpha.Y + Z)", true),
        make("R3", "alpha.(tau.X + tau.Y)", "alpha.X + alpha.Y", true),
        make("RP1", "tau.X + Y", "tau.(X + Y)", false),
        make("RP2", "tau.X + Y", "X", false),
        make("R4", "tau.delta(X) + Y", "delta(X + Y)", true),
        make("R5", "delta(X)", "delta(Y)", true),
        make("tau_id", "tau.X", "X", true),
        make("distr", "alpha.(X + Y)", "alpha.X + alpha.Y", true),
        make("choice_drop", "X + Y", "X", false),
        make("delta_id", "delta(X)", "X", true),
    };
    return all;
}

const AxiomSchema& axiom(const std::string& name) {
    for (auto& a : axiom_schemas())
        if (a.name == name) return a;
    throw std::invalid_argument("unknown axiom " + name);
}

std::pair<Term, Term> instantiate(const AxiomSchema& a, const AxiomInstance& inst) {
    for (auto& v : a.vars)
        if (!inst.subst.count(v)) throw std::invalid_argument("no term for " + v + " in " + a.name);
    auto close = [&](const Term& t) {
        Term r = substitute(t, inst.subst);
        if (a.uses_alpha) r = substitute_action(r, "alpha", inst.alpha);
        return r;
    };
    return {close(a.lhs), close(a.rhs)};
}

std::vector<Term> small_terms(int size) {
    std::vector<std::vector<Term>> by(size + 1);
    std::map<std::string, int> seen;  // key -> smallest size
    auto add = [&](int s, Term t) {
        if (seen.count(t->key)) return;
        seen.emplace(t->key, s);
        by[s].push_back(std::move(t));
    };
    add(0, nil());
    const Action acts[] = {Action::name("a"), Action::name("b"), Action::tau()};
    for (int s = 1; s <= size; ++s) {
        for (auto& t : by[s - 1]) {
            for (auto& a : acts) add(s, prefix(a, t));
            add(s, delta(t));
        }
        for (int i = 1; i + 1 <= s - 1; ++i)
            for (auto& x : by[i])
                for (auto& y : by[s - 1 - i])
                    if (x->key < y->key) add(s, choice(x, y));
    }
    std::vector<Term> out;
    for (auto& v : by) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<AxiomInstance> default_corpus(const AxiomSchema& a, std::size_t budget) {
    std::vector<Action> alphas = {Action::tau()};
    if (a.uses_alpha) alphas = {Action::name("a"), Action::name("b"), Action::tau()};
    const std::size_t k = a.vars.size();
    std::vector<Term> pool = small_terms(0);
    for (int s = 1; s <= 4; ++s) {
        auto bigger = small_terms(s);
        std::size_t n = alphas.size();
        for (std::size_t i = 0; i < k; ++i) n *= bigger.size();
        if (n > budget) break;
        pool = std::move(bigger);
    }
    std::vector<AxiomInstance> out;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        for (auto& al : alphas) {
            AxiomInstance inst;
            inst.alpha = al;
            inst.uses_alpha = a.uses_alpha;
            for (std::size_t i = 0; i < k; ++i) inst.subst[a.vars[i]] = pool[idx[i]];
            out.push_back(std::move(inst));
        }
        std::size_t i = 0;
        while (i < k && ++idx[i] == pool.size()) idx[i++] = 0;
        if (i == k) break;
    }
    return out;
}

SoundnessReport audit(const AxiomSchema& a, const PreorderId& preorder, const std::vector<AxiomInstance>& corpus,
                      Mode mode) {
    SoundnessReport r;
    r.axiom = a.name;
    r.preorder = preorder;
    SemanticsCache cache;
    CheckOptions o;
    o.cache = &cache;
    for (auto& inst : corpus) {
        auto [l, rt] = instantiate(a, inst);
        ++r.instances_checked;
        Verdict v = check(preorder, l, rt, mode, o);
        bool converse = false;
        if (v.holds && a.equation) {
            v = check(preorder, rt, l, mode, o);
            converse = true;
        }
        if (v.holds) continue;
        r.sound_on_sample = false;
        r.counterexample = inst;
        r.lhs = l;
        r.rhs = rt;
        r.converse = converse;
        r.verdict = v;
        break;
    }
    return r;
}

std::vector<PreorderId> default_audit_preorders() {
    return {{BaseOrder::NDFD, Refinement::Tau, Direction::Must},
            {BaseOrder::FDId, Refinement::Tau, Direction::Must},
            {BaseOrder::FDIBot, Refinement::Tau, Direction::Must},
            {BaseOrder::TInf, Refinement::Plain, Direction::Must},
            {BaseOrder::T, Refinement::Plain, Direction::Must}};
}

std::vector<SoundnessReport> audit_matrix(const std::vector<PreorderId>& preorders, Mode mode, std::size_t budget) {
    std::vector<SoundnessReport> out;
    for (auto& a : axiom_schemas()) {
        auto corpus = default_corpus(a, budget);
        for (auto& p : preorders) out.push_back(audit(a, p, corpus, mode));
    }
    return out;
}

std::string matrix_markdown(const std::vector<SoundnessReport>& reports) {
    std::vector<std::string> cols, rows;
    for (auto& r : reports) {
        if (std::find(cols.begin(), cols.end(), r.preorder.str()) == cols.end()) cols.push_back(r.preorder.str());
        if (std::find(rows.begin(), rows.end(), r.axiom) == rows.end()) rows.push_back(r.axiom);
    }
    std::ostringstream os;
    os << "| axiom |";
    for (auto& c : cols) os << " " << c << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
    os << "\n";
    for (auto& row : rows) {
        os << "| " << row << " |";
        for (auto& c : cols)
            for (auto& r : reports)
                if (r.axiom == row && r.preorder.str() == c)
                    os << " " << (r.sound_on_sample ? "sound (" + std::to_string(r.instances_checked) + ")" : "unsound")
                       << " |";
        os << "\n";
    }
    return os.str();
}

}  // namespace rewardtest
