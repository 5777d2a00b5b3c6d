#pragma once

#include "rewardtest/lts.hpp"
#include "rewardtest/preorder.hpp"
#include "rewardtest/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rewardtest {

/** lhs ⊑ rhs, or lhs ≡ rhs for equations. Schema variables are upper case; `alpha` is an action variable. */
struct AxiomSchema {
    std::string name;
    std::string lhs_text;
    std::string rhs_text;
    bool equation = true;
    Term lhs;
    Term rhs;
    std::vector<std::string> vars;
    bool uses_alpha = false;
    std::string str() const;
};

/** R1 R2 R3 RP1 RP2 R4 R5 tau_id distr choice_drop delta_id */
const std::vector<AxiomSchema>& axiom_schemas();
const AxiomSchema& axiom(const std::string& name);

struct AxiomInstance {
    std::map<std::string, Term> subst;
    Action alpha = Action::tau();
    bool uses_alpha = false;
    std::string str() const;
};

/** Throws if a schema variable is not covered. */
std::pair<Term, Term> instantiate(const AxiomSchema& a, const AxiomInstance& inst);

/** Closed terms over 0, a.t, b.t, tau.t, t + t, delta(t) with at most `size` operators, canonical and sorted. */
std::vector<Term> small_terms(int size);

/**
 * Exhaustive instances: the largest term pool whose tuples stay under `budget` instances, times
 * alpha in {a, b, tau} when the schema uses it.
 */
std::vector<AxiomInstance> default_corpus(const AxiomSchema& a, std::size_t budget = 1500);

struct SoundnessReport {
    std::string axiom;
    PreorderId preorder;
    std::size_t instances_checked = 0;
    bool sound_on_sample = true;
    std::optional<AxiomInstance> counterexample;
    std::optional<Term> lhs, rhs;
    bool converse = false;  // the failing direction was rhs ⊑ lhs
    std::optional<Verdict> verdict;
};

SoundnessReport audit(const AxiomSchema& a, const PreorderId& preorder, const std::vector<AxiomInstance>& corpus,
                      Mode mode = Mode::Ccs);

/** Default preorders of the matrix: NDFD-tau, FDI_d-tau, FDI_bot-tau, T_inf, T. */
std::vector<PreorderId> default_audit_preorders();
std::vector<SoundnessReport> audit_matrix(const std::vector<PreorderId>& preorders, Mode mode = Mode::Ccs,
                                          std::size_t budget = 1500);
std::string matrix_markdown(const std::vector<SoundnessReport>& reports);

}  // namespace rewardtest
