#pragma once

#include "rewardtest/automata.hpp"
#include "rewardtest/lts.hpp"
#include "rewardtest/observations.hpp"
#include "rewardtest/term.hpp"

#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rewardtest {

struct RegexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * Regular set of finite words over visible actions. Syntax: `a`, `'a`, `eps`, `none`,
 * juxtaposition for concatenation, `|`, postfix `*` `+` `?`, parentheses.
 */
class WordSet {
public:
    static WordSet parse(const std::string& regex);
    static WordSet words(const std::vector<Word>& ws);
    static WordSet empty();

    std::set<std::string> names() const;
    /** Complete DFA over alpha; throws RegexError if a letter is outside alpha. */
    Dfa dfa(const Alphabet& alpha) const;
    const std::string& str() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

struct PropertyResult {
    enum class Kind { None, Trace, Deadlock, Divergence, Lasso };
    bool holds = true;
    Kind kind = Kind::None;
    Word trace;   // Trace, Deadlock, Divergence
    Lasso lasso;  // Lasso
    std::string str() const;
};

struct PropertyOptions {
    Mode mode = Mode::Ccs;
    std::size_t state_cap = 10000;
};

/** ptr(P) and B are disjoint. */
PropertyResult check_safety(const Term& p, const WordSet& bad, const PropertyOptions& opts = {});
/** Every complete trace has a prefix in G. */
PropertyResult check_liveness(const Term& p, const WordSet& good, const PropertyOptions& opts = {});
/** Every complete trace with a prefix in C has a prefix in G. */
PropertyResult check_cond_liveness(const Term& p, const WordSet& cond, const WordSet& good,
                                   const PropertyOptions& opts = {});

/**
 * Linear-time property. Finite complete traces (deadlocks, divergences) must be accepted by
 * `finite`. An infinite trace belongs to the property iff the run of `infinite` on it is
 * eventually always accepting.
 */
struct LtProperty {
    std::function<Dfa(const Alphabet&)> finite;
    std::function<Dfa(const Alphabet&)> infinite;
    std::set<std::string> names;
};

LtProperty lt_everything();
/** Finite complete traces from `fin`, no infinite trace. */
LtProperty lt_finite_only(const WordSet& fin);
/** Finite complete traces from `fin`, infinite traces exactly the given lassos. */
LtProperty lt_lassos(const WordSet& fin, const std::vector<Lasso>& lassos);
LtProperty lt_liveness(const WordSet& good);
LtProperty lt_safety(const WordSet& bad);
LtProperty lt_cond_liveness(const WordSet& cond, const WordSet& good);

/** Complete traces of P all in phi. */
bool check_lt(const Term& p, const LtProperty& phi, const PropertyOptions& opts = {});

enum class PropertyKind { Liveness, Safety, CondLiveness };
std::string to_string(PropertyKind k);

/**
 * The reward test of a property, built on the monitor automaton (finitely many equations, no
 * horizon). P satisfies the property iff inf_reward(test, P) >= threshold, with strict > for
 * liveness.
 */
struct PropertyTest {
    Term test;
    Rational threshold;
    bool strict = false;
};
/** For CondLiveness `specs` is {C, G}; otherwise a single set. Throws on specs holding the empty word. */
PropertyTest property_to_test(PropertyKind kind, const std::vector<WordSet>& specs,
                              const std::set<std::string>& extra_names);

struct NamedProperty {
    std::string name;
    PropertyKind kind;
    std::vector<WordSet> specs;  // {G}, {B} or {C, G}
};

/**
 * Lines `NAME = regex`, `--` comments, and optional directives `liveness NAME`, `safety NAME`,
 * `cond C G`. Without directives, names starting with G are liveness, B safety, and C<x> with
 * G<x> a conditional pair.
 */
std::vector<NamedProperty> parse_property_file(const std::string& text);

PropertyResult check_property(const Term& p, const NamedProperty& prop, const PropertyOptions& opts = {});

}  // namespace rewardtest
