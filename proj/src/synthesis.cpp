#include "rewardtest/synthesis.hpp"

#include "rewardtest/reward.hpp"

namespace rewardtest {

namespace {

Term complement_chain(const Word& w, Term tail) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) tail = prefix(it->complement(), Rational{0}, tail);
    return tail;
}

Term bonus_tau() { return prefix(Action::tau(), Rational{1}, nil()); }

Term offer_all(const Word& x, const Rational& r) {
    std::vector<Term> branches;
    for (auto& a : x) branches.push_back(prefix(a.complement(), r, nil()));
    return choice(std::move(branches));
}

std::string eq(std::size_t i) { return "X" + std::to_string(i); }

/** X_i = tau[1] + a_{i+1}-bar.X_{i+1} for i < n, X_n = last. */
Term escape_chain(const Word& w, Term last) {
    std::vector<std::pair<std::string, Term>> defs;
    for (std::size_t i = 0; i < w.size(); ++i)
        defs.emplace_back(eq(i), choice(bonus_tau(), prefix(w[i].complement(), Rational{0}, var(eq(i + 1)))));
    defs.emplace_back(eq(w.size()), last);
    return rec(eq(0), std::move(defs));
}

/** One equation per lasso position; the last one loops back to the start of the cycle. */
template <class Body>
Term lasso_rec(const Word& stem, const Word& cycle, Body body) {
    Word all = stem;
    all.insert(all.end(), cycle.begin(), cycle.end());
    std::vector<std::pair<std::string, Term>> defs;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::size_t next = i + 1 == all.size() ? stem.size() : i + 1;
        defs.emplace_back(eq(i), body(all[i], var(eq(next))));
    }
    return rec(eq(0), std::move(defs));
}

}  // namespace

Term synthesize(BaseOrder base, Component component, const Witness& w) {
    auto mismatch = [&] {
        return WitnessMismatch("no test for component " + to_string(component) + " of " + to_string(base));
    };
    const bool bot = base == BaseOrder::FDIBot;
    switch (component) {
        case Component::Divergences: {
            if (w.kind != Witness::Kind::Trace) throw mismatch();
            if (bot) return escape_chain(w.trace, bonus_tau());
            if (base != BaseOrder::NDFD && base != BaseOrder::FDId) throw mismatch();
            return complement_chain(w.trace, prefix(Action::tau(), Rational{-1}, bonus_tau()));
        }
        case Component::Infinite: {
            if (w.kind != Witness::Kind::Lasso || w.lasso.cycle.empty()) throw mismatch();
            const Lasso& l = w.lasso;
            if (base == BaseOrder::NDFD || base == BaseOrder::TInf)
                return lasso_rec(l.stem, l.cycle,
                                 [](const Action& a, Term next) { return prefix(a.complement(), Rational{-1}, next); });
            if (bot)
                return lasso_rec(l.stem, l.cycle, [](const Action& a, Term next) {
                    return choice(bonus_tau(), prefix(a.complement(), Rational{0}, next));
                });
            if (base != BaseOrder::FDId || w.cut > l.stem.size()) throw mismatch();
            Word first(l.stem.begin(), l.stem.begin() + static_cast<std::ptrdiff_t>(w.cut));
            Word rest(l.stem.begin() + static_cast<std::ptrdiff_t>(w.cut), l.stem.end());
            Term tail = lasso_rec(rest, l.cycle, [](const Action& a, Term next) {
                return choice(bonus_tau(), prefix(a.complement(), Rational{0}, next));
            });
            return complement_chain(first, prefix(Action::tau(), Rational{-1}, tail));
        }
        case Component::Failures: {
            if (w.kind != Witness::Kind::Failure) throw mismatch();
            if (bot) return escape_chain(w.trace, offer_all(w.refusal, Rational{1}));
            if (base != BaseOrder::NDFD && base != BaseOrder::FDId) throw mismatch();
            return complement_chain(w.trace, prefix(Action::tau(), Rational{-1}, offer_all(w.refusal, Rational{1})));
        }
        case Component::Ptr: {
            if (w.kind != Witness::Kind::Trace) throw mismatch();
            if (base != BaseOrder::T && base != BaseOrder::TInf) throw mismatch();
            return complement_chain(w.trace, prefix(Action::tau(), Rational{-1}, nil()));
        }
        case Component::Stability: break;
    }
    throw mismatch();
}

bool in_test_class(BaseOrder base, const TestClass& c) {
    switch (base) {
        case BaseOrder::NDFD: return c.well_behaved == Tri::Yes;
        case BaseOrder::FDId: return c.well_behaved == Tri::Yes && c.single_penalty == Tri::Yes;
        case BaseOrder::FDIBot: return c.well_behaved == Tri::Yes && c.nonnegative == Tri::Yes;
        case BaseOrder::TInf: return c.well_behaved == Tri::Yes && c.nonpositive == Tri::Yes;
        case BaseOrder::T:
            return c.well_behaved == Tri::Yes && c.nonpositive == Tri::Yes && c.single_penalty == Tri::Yes;
    }
    return false;
}

std::string test_class_name(BaseOrder base) {
    switch (base) {
        case BaseOrder::NDFD: return "well-behaved";
        case BaseOrder::FDId: return "single-penalty";
        case BaseOrder::FDIBot: return "nonnegative";
        case BaseOrder::TInf: return "nonpositive";
        case BaseOrder::T: return "nonpositive single-penalty";
    }
    return "";
}

bool verify_distinguishes(const Term& test, const Term& p, const Term& q, BaseOrder base, Mode mode,
                          std::size_t state_cap) {
    TestClass c = classify_test(test, state_cap);
    if (!in_test_class(base, c))
        throw ClassMismatch("test " + print(test) + " is not " + test_class_name(base) + " as " + to_string(base) +
                            " requires");
    RewardOptions o{state_cap};
    return inf_reward(test, p, mode, o).infimum > inf_reward(test, q, mode, o).infimum;
}

}  // namespace rewardtest
