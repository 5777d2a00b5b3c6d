#pragma once

#include "rewardtest/action.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rewardtest {

/** Sorted visible letters: name and co-name of each base. */
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(const std::set<std::string>& names);
    explicit Alphabet(std::vector<Action> letters);

    const std::vector<Action>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    const Action& operator[](std::size_t i) const { return letters_[i]; }
    /** -1 when absent. */
    int index(const Action& a) const;
    /** Comma separated, for cache keys. */
    std::string key() const;

private:
    std::vector<Action> letters_;
};

/** Letter -1 is an epsilon move. */
struct Nfa {
    int states = 0;
    std::vector<int> start;
    std::vector<bool> accept;
    std::vector<std::vector<std::pair<int, int>>> edges;  // state -> (letter, target)

    int add_state(bool accepting = false);
    void add_edge(int from, int letter, int to) { edges[from].emplace_back(letter, to); }
};

/** Complete deterministic automaton; state 0 is the start. */
struct Dfa {
    std::size_t letters = 0;
    std::vector<std::vector<int>> delta;
    std::vector<bool> accept;

    int size() const { return static_cast<int>(delta.size()); }
    bool accepts(const std::vector<int>& word) const;
    /** States from which some accepting state is reachable. */
    std::vector<bool> productive() const;
};

Dfa determinize(const Nfa& a, std::size_t letters);
Dfa complement(const Dfa& d);
/** Accepting states become absorbing: the language of words with a prefix in L. */
Dfa extension_closure(const Dfa& d);
/** Keeps only words of L with no proper prefix in L. */
Dfa antichain(const Dfa& d);
/** Both DFAs over the same letters; op is "and" or "or". */
Dfa dfa_product(const Dfa& a, const Dfa& b, bool conjunction);
bool dfa_empty(const Dfa& d);
bool dfa_equivalent(const Dfa& a, const Dfa& b);

struct InclusionWitness {
    bool included = true;
    std::vector<int> word;  // shortest word of L(B) \ L(A), ties broken by letter order
};

/** L(A) contains L(B)? Breadth first over B times the determinised A. */
InclusionWitness trace_language_included(const Nfa& a, const Nfa& b, std::size_t letters);

}  // namespace rewardtest
