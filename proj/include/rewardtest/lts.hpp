#pragma once

#include "rewardtest/term.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rewardtest {

enum class Mode { Ccs, CcsBot };

std::string to_string(Mode m);  // "ccs" / "ccs-bot"
Mode parse_mode(const std::string& s);

struct StateCapExceeded : std::runtime_error {
    explicit StateCapExceeded(std::size_t cap)
        : std::runtime_error("state cap of " + std::to_string(cap) + " exceeded") {}
};

struct NonConvergentUnfolding : std::runtime_error {
    explicit NonConvergentUnfolding(const std::string& term)
        : std::runtime_error("recursion never reaches a prefix: " + term) {}
};

struct ExplorationBudget {
    enum class OnExceed { Error, Truncate };
    enum class Unguarded {
        Reject,         // ccs mode: a strongly unguarded state raises NonConvergentUnfolding
        Transitionless  // keep the state with whatever transitions the rules derive (none for rec X = X)
    };

    std::size_t state_cap = 10000;
    OnExceed on_exceed = OnExceed::Error;
    Unguarded unguarded = Unguarded::Reject;
};

struct Step {
    Action act;
    Rational reward;
    Term target;
};

/** Outgoing transitions of a closed term by the structural rules, sorted. */
std::vector<Step> step(const Term& t);

struct Transition {
    int src;
    Action act;
    Rational reward;
    int dst;
};

struct Lts {
    std::vector<Term> states;
    int initial = 0;
    std::vector<Transition> transitions;
    std::vector<std::vector<int>> out;  // state -> indices into transitions
    Mode mode = Mode::Ccs;
    std::vector<bool> stable;
    std::vector<bool> converges;
    std::vector<bool> diverges;
    bool truncated = false;

    std::size_t size() const { return states.size(); }
};

/** BFS over canonical terms. Throws StateCapExceeded or NonConvergentUnfolding per the budget. */
Lts explore(const Term& t, const ExplorationBudget& budget = {}, Mode mode = Mode::Ccs);

/** test | proc */
Term compose(const Term& test, const Term& proc);

/**
 * Parallel composition computed on already explored components. Its transitions are those of
 * explore(compose(T, P)); state numbering follows the pair BFS instead.
 */
Lts product(const Lts& test, const Lts& proc, std::size_t state_cap = 10000);

/** Recomputes stable and diverges from transitions and converges. */
void compute_flags(Lts& lts);

std::string to_dot(const Lts& lts);

}  // namespace rewardtest
