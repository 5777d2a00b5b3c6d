#pragma once

#include "rewardtest/automata.hpp"
#include "rewardtest/graph.hpp"
#include "rewardtest/lts.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rewardtest {

enum class ObservationVariant { Plain, DClosed, BotClosed };
std::string to_string(ObservationVariant v);

/**
 * Observation sets of a finite Lts over a fixed alphabet. Letters are indices into alpha.
 * Weak successor sets are always tau-closed.
 */
struct ObservationSemantics {
    std::shared_ptr<const Lts> lts;
    Alphabet alpha;
    std::vector<Bits> tau_closure;                     // state -> states reachable by tau*
    std::vector<std::vector<std::pair<int, int>>> visible;  // state -> (letter, target), strong
    Bits divergent;    // diverges (mode aware)
    Bits deadlock;     // stable, no visible initial
    Bits stable;
    std::vector<Bits> refusal;  // stable state -> maximal refusal (letters); empty Bits otherwise
    Bits inf_capable;  // some infinite path from here performs infinitely many visible steps
    Bits live;         // can reach a divergence or an inf_capable state
    Nfa trace_nfa;     // language = ptr
    std::vector<int> component;          // SCC of the full transition graph
    std::vector<bool> visible_cycle;     // component -> has an internal visible edge

    std::size_t size() const { return lts->size(); }
    Bits start() const { return tau_closure[lts->initial]; }
    /** Tau-closed set after one weak letter step. */
    Bits after(const Bits& set, int letter) const;
    Bits after(const std::vector<int>& word) const;
};

/** Throws on truncated LTSs and on visible labels missing from alpha. */
ObservationSemantics build_observations(std::shared_ptr<const Lts> lts, const Alphabet& alpha);

std::vector<int> letters_of(const Alphabet& alpha, const Word& w);
Word word_of(const Alphabet& alpha, const std::vector<int>& letters);

struct Lasso {
    Word stem;
    Word cycle;
    std::string str() const;  // "stem (cycle)^w"
};

/** Outcome of an inclusion check of Q's observations in P's. */
struct Inclusion {
    bool included = true;
    Word word;                   // trace witness, or the failure / divergence trace
    std::optional<Word> refusal;  // failures
    std::optional<Lasso> lasso;   // infinite traces
    std::size_t cut = 0;          // infinite traces: length of the finite prefix outside P
};

/** ptr(P) contains ptr(Q). */
Inclusion ptr_included(const ObservationSemantics& p, const ObservationSemantics& q);
/** divergences (Plain / DClosed) or divergences_bot (BotClosed). */
Inclusion divergences_included(const ObservationSemantics& p, const ObservationSemantics& q, ObservationVariant v);
Inclusion failures_included(const ObservationSemantics& p, const ObservationSemantics& q, ObservationVariant v);
/**
 * infinite / inf_d / inf_bot by reduction to finite prefixes, valid for finite-state systems:
 * Plain and DClosed coincide there.
 */
Inclusion infinite_traces_included(const ObservationSemantics& p, const ObservationSemantics& q,
                                   ObservationVariant v);

/** Bounded enumerations for inspection and reports. */
struct ObservationSummary {
    std::vector<Word> ptr;
    std::vector<Word> divergences;
    std::vector<Word> deadlocks;
    std::vector<std::pair<Word, Word>> maximal_failures;  // (trace, maximal refusal)
    std::vector<Lasso> lassos;                            // one per reachable visible cycle shape, bounded
};
ObservationSummary summarize(const ObservationSemantics& s, std::size_t max_len);

}  // namespace rewardtest
