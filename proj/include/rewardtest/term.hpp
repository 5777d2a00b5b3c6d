#pragma once

#include "rewardtest/action.hpp"
#include "rewardtest/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rewardtest {

enum class TermKind : std::uint8_t { Prefix, Choice, Par, Restrict, Relabel, Var, Rec };

struct TermNode;
/** Terms are immutable and shared. Build them only through the functions below. */
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
    TermKind kind;
    Action act;                                               // Prefix
    Rational reward{0};                                       // Prefix
    std::vector<Term> kids;                                   // Prefix: body; Choice: branches; Par: l, r; Restrict/Relabel: body
    std::vector<std::string> names;                           // Restrict, sorted
    std::vector<std::pair<std::string, std::string>> relabel; // Relabel, old -> new, sorted by old
    std::string var;                                          // Var name, Rec head
    std::vector<std::pair<std::string, Term>> defs;           // Rec equations, sorted by variable
    std::string key;                                          // canonical text; equal keys <=> equal terms
    std::size_t hash = 0;

    const Term& body() const { return kids.front(); }
    bool is_nil() const { return kind == TermKind::Choice && kids.empty(); }
};

Term nil();
/** Throws std::invalid_argument for omega with a nonzero reward. */
Term prefix(Action a, Rational reward, Term body);
Term prefix(Action a, Term body);
/** Flattens nested choices, drops 0 branches, sorts and deduplicates. One branch collapses to itself. */
Term choice(std::vector<Term> branches);
Term choice(Term a, Term b);
Term par(Term l, Term r);
Term restrict(Term body, std::vector<std::string> names);
/** map: old name -> new name. Identity pairs are dropped. */
Term relabel(Term body, std::vector<std::pair<std::string, std::string>> map);
Term var(std::string name);
/** Throws std::invalid_argument if head is not defined. */
Term rec(std::string head, std::vector<std::pair<std::string, Term>> defs);

/** rec D { D = tau.D + p } with D fresh for p. */
Term delta(const Term& p);
/** delta(0) */
Term omega_process();

/** Canonical text; parse(print(t)) rebuilds t. */
const std::string& print(const Term& t);

inline bool same(const Term& a, const Term& b) { return a == b || a->key == b->key; }

std::set<std::string> free_vars(const Term& t);
/** Every variable occurring anywhere, bound or free. */
std::set<std::string> all_vars(const Term& t);
bool closed(const Term& t);

/** Simultaneous substitution. Values are expected to be closed, so no capture can arise. */
Term substitute(const Term& t, const std::map<std::string, Term>& sub);
/** Replaces every occurrence of the action base `from` (name and coname) by `to`. */
Term substitute_action(const Term& t, const std::string& from, const Action& to);

/** The body of the head equation with every defined variable Y replaced by rec(Y, defs). */
Term unfold(const Term& rec_term);

/** All action base names occurring, including restriction sets and relabelling pairs. */
std::set<std::string> names_of(const Term& t);

bool has_omega(const Term& t);
bool has_rewards(const Term& t);
/** No rewards, no omega. */
bool is_plain(const Term& t);

/** Maps every reward r to -r. */
Term negate_rewards(const Term& t);

struct TermHash {
    std::size_t operator()(const Term& t) const { return t->hash; }
};
struct TermEq {
    bool operator()(const Term& a, const Term& b) const { return same(a, b); }
};

}  // namespace rewardtest
