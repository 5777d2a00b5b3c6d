#pragma once

#include "rewardtest/lts.hpp"
#include "rewardtest/observations.hpp"
#include "rewardtest/term.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rewardtest {

enum class BaseOrder { T, TInf, NDFD, FDId, FDIBot };
enum class Refinement { Plain, Tau };
enum class Direction { Must, May };

struct PreorderId {
    BaseOrder base = BaseOrder::NDFD;
    Refinement refinement = Refinement::Plain;
    Direction direction = Direction::Must;

    /** "FDI_d", "FDI_bot-tau", "T-may", ... */
    std::string str() const;
    friend bool operator==(const PreorderId&, const PreorderId&) = default;
    friend auto operator<=>(const PreorderId&, const PreorderId&) = default;
};

std::string to_string(BaseOrder b);
/** Accepts T, T_inf, NDFD, FDI_d, FDI_bot (case-insensitive, "-" or "_"). */
BaseOrder parse_base(const std::string& s);
PreorderId parse_preorder(const std::string& s);

enum class Component { Divergences, Infinite, Failures, Ptr, Stability };
std::string to_string(Component c);

struct Witness {
    enum class Kind { Trace, Failure, Lasso, Stability };
    Kind kind = Kind::Trace;
    Word trace;    // Trace, Failure
    Word refusal;  // Failure
    Lasso lasso;   // Lasso
    std::size_t cut = 0;
    std::string str() const;
};

struct Verdict {
    PreorderId preorder;
    bool holds = true;
    std::optional<Component> failing_component;
    std::optional<Witness> witness;
    std::optional<Term> synthesized_test;
    std::string note;
};

/** Explored systems and observation semantics keyed by canonical term, mode and alphabet. */
class SemanticsCache {
public:
    std::shared_ptr<const Lts> lts(const Term& t, Mode mode, std::size_t state_cap);
    std::shared_ptr<const ObservationSemantics> semantics(const Term& t, Mode mode, const Alphabet& alpha,
                                                          std::size_t state_cap);
    void clear();

private:
    std::mutex mu_;
    std::map<std::pair<std::string, Mode>, std::shared_ptr<const Lts>> lts_;
    std::map<std::tuple<std::string, Mode, std::string>, std::shared_ptr<const ObservationSemantics>> sem_;
};

struct CheckOptions {
    std::size_t state_cap = 10000;
    bool synthesize = true;
    SemanticsCache* cache = nullptr;  // nullptr: a private cache per call
};

/** Is P below Q in the given preorder. */
Verdict check(const PreorderId& id, const Term& p, const Term& q, Mode mode, const CheckOptions& opts = {});

struct AuditResult {
    std::vector<Verdict> table;  // every base, plain and tau, must direction
    std::vector<std::string> violations;
    const Verdict& at(BaseOrder b, Refinement r) const;
};
AuditResult hierarchy_audit(const Term& p, const Term& q, Mode mode, const CheckOptions& opts = {});

struct ClassicalVerdicts {
    Verdict may;   // P below Q for may testing: T-style trace inclusion, arguments swapped
    Verdict must;  // FDI_bot
};
ClassicalVerdicts classical_verdicts(const Term& p, const Term& q, Mode mode, const CheckOptions& opts = {});

}  // namespace rewardtest
