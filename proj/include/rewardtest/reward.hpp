#pragma once

#include "rewardtest/lts.hpp"
#include "rewardtest/rational.hpp"
#include "rewardtest/syntax.hpp"
#include "rewardtest/term.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rewardtest {

struct NotWellBehaved : std::invalid_argument {
    explicit NotWellBehaved(const std::string& t)
        : std::invalid_argument("test is not certified well-behaved: " + t) {}
};

/** Weighted graph with marked endpoints; maximal computations are maximal paths from initial. */
struct WeightedGraph {
    struct Edge {
        int src;
        int dst;
        Rational weight;
    };
    int nodes = 0;
    int initial = 0;
    std::vector<Edge> edges;
    std::vector<bool> terminal;  // a maximal finite computation may end here

    std::vector<std::vector<int>> out() const;  // node -> edge indices
};

/** A finite path (empty cycle) or a lasso; edges are indices into the graph. */
struct Computation {
    std::vector<int> stem;
    std::vector<int> cycle;
    bool infinite() const { return !cycle.empty(); }
};

/** Finite: the sum. Lasso: liminf of the partial sums. Throws on an empty cycle. */
ExtendedReward computation_value(const std::vector<Rational>& stem, const std::vector<Rational>& cycle,
                                 bool lasso);
ExtendedReward computation_value(const WeightedGraph& g, const Computation& c);

struct InfimumResult {
    ExtendedReward value;
    bool attained = true;  // always true on finite graphs
    Computation witness;
};

/** Infimum of computation_value over all maximal computations. */
InfimumResult infimum(const WeightedGraph& g);

/** Tau subgraph of a composed system. */
struct ComputationGraph {
    std::shared_ptr<const Lts> lts;
    WeightedGraph graph;
    std::vector<int> edge_transition;  // graph edge -> transition index in lts
    std::vector<bool> success;         // some omega move
};

/** Endpoints: no tau move; in ccs-bot also every non-converging state. */
ComputationGraph computation_graph(std::shared_ptr<const Lts> composed);

struct ApplySummary {
    ExtendedReward infimum;
    bool attained = true;
    Computation witness;
    std::shared_ptr<const ComputationGraph> graph;
    struct Classical {
        bool may_success = false;
        bool must_success = false;
    };
    std::optional<Classical> classical;
};

struct RewardOptions {
    std::size_t state_cap = 10000;
};

/** Lts used for the analysis layers: strongly unguarded recursion gives a transitionless state. */
std::shared_ptr<const Lts> explore_for_analysis(const Term& t, Mode mode, std::size_t state_cap);

/** Refuses tests whose class is not certified well-behaved. */
ApplySummary inf_reward(const Term& test, const Term& proc, Mode mode, const RewardOptions& opts = {});
bool smyth_leq(const Term& test, const Term& p, const Term& q, Mode mode, const RewardOptions& opts = {});

struct ClassicalOutcome {
    bool may_success = false;
    bool must_success = false;
};
/** No fairness: a computation on which the test never moves again is still maximal. */
ClassicalOutcome classical_apply(const Term& test, const Term& proc, Mode mode, const RewardOptions& opts = {});
ClassicalOutcome classical_outcome(const ComputationGraph& g);

/**
 * must_success(T, P)        iff inf_reward(emulate_must(T).test, P) >= threshold
 * not may_success(T, P)     iff inf_reward(emulate_dual_must(T).test, P) >= threshold
 */
struct EmulatedTest {
    Term test;
    Rational threshold;
};
EmulatedTest emulate_must(const Term& classical_test, std::size_t state_cap = 10000);
EmulatedTest emulate_dual_must(const Term& classical_test, std::size_t state_cap = 10000);

/** Throws NotWellBehaved when the test is known not to be well-behaved. */
Term negate_test(const Term& test);

}  // namespace rewardtest
