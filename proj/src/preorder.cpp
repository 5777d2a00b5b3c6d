#include "rewardtest/preorder.hpp"

#include "rewardtest/reward.hpp"
#include "rewardtest/synthesis.hpp"
#include "rewardtest/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace rewardtest {

std::string to_string(BaseOrder b) {
    switch (b) {
        case BaseOrder::T: return "T";
        case BaseOrder::TInf: return "T_inf";
        case BaseOrder::NDFD: return "NDFD";
        case BaseOrder::FDId: return "FDI_d";
        case BaseOrder::FDIBot: return "FDI_bot";
    }
    return "";
}

std::string PreorderId::str() const {
    std::string s = to_string(base);
    if (refinement == Refinement::Tau) s += "-tau";
    if (direction == Direction::May) s += "-may";
    return s;
}

namespace {

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

}  // namespace

BaseOrder parse_base(const std::string& s) {
    std::string k = lower(s);
    if (k == "t") return BaseOrder::T;
    if (k == "t_inf" || k == "tinf") return BaseOrder::TInf;
    if (k == "ndfd") return BaseOrder::NDFD;
    if (k == "fdi_d" || k == "fdid") return BaseOrder::FDId;
    if (k == "fdi_bot" || k == "fdibot") return BaseOrder::FDIBot;
    throw std::invalid_argument("unknown preorder " + s);
}

PreorderId parse_preorder(const std::string& s) {
    PreorderId id;
    std::string k = lower(s);
    auto strip = [&](const std::string& suffix) {
        if (k.size() > suffix.size() && k.compare(k.size() - suffix.size(), suffix.size(), suffix) == 0) {
            k.resize(k.size() - suffix.size());
            return true;
        }
        return false;
    };
    for (bool again = true; again;) {
        again = false;
        if (strip("_may")) {
            id.direction = Direction::May;
            again = true;
        }
        if (strip("_tau")) {
            id.refinement = Refinement::Tau;
            again = true;
        }
    }
    id.base = parse_base(k);
    return id;
}

std::string to_string(Component c) {
    switch (c) {
        case Component::Divergences: return "divergences";
        case Component::Infinite: return "infinite";
        case Component::Failures: return "failures";
        case Component::Ptr: return "ptr";
        case Component::Stability: return "stability";
    }
    return "";
}

std::string Witness::str() const {
    switch (kind) {
        case Kind::Trace: return word_str(trace);
        case Kind::Failure: return "<" + word_str(trace) + ", {" + [&] {
                                       std::string r;
                                       for (std::size_t i = 0; i < refusal.size(); ++i)
                                           r += (i ? "," : "") + refusal[i].str();
                                       return r;
                                   }() + "}>";
        case Kind::Lasso: return lasso.str();
        case Kind::Stability: return "stability";
    }
    return "";
}

std::shared_ptr<const Lts> SemanticsCache::lts(const Term& t, Mode mode, std::size_t state_cap) {
    std::pair<std::string, Mode> key{t->key, mode};
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = lts_.find(key);
        if (it != lts_.end()) return it->second;
    }
    auto l = explore_for_analysis(t, mode, state_cap);
    std::lock_guard<std::mutex> g(mu_);
    return lts_.emplace(key, l).first->second;
}

std::shared_ptr<const ObservationSemantics> SemanticsCache::semantics(const Term& t, Mode mode,
                                                                      const Alphabet& alpha, std::size_t state_cap) {
    std::tuple<std::string, Mode, std::string> key{t->key, mode, alpha.key()};
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = sem_.find(key);
        if (it != sem_.end()) return it->second;
    }
    auto s = std::make_shared<const ObservationSemantics>(build_observations(lts(t, mode, state_cap), alpha));
    std::lock_guard<std::mutex> g(mu_);
    return sem_.emplace(key, s).first->second;
}

void SemanticsCache::clear() {
    std::lock_guard<std::mutex> g(mu_);
    lts_.clear();
    sem_.clear();
}

namespace {

Witness witness_of(Component c, const Inclusion& inc) {
    Witness w;
    w.trace = inc.word;
    if (c == Component::Failures) {
        w.kind = Witness::Kind::Failure;
        w.refusal = inc.refusal.value_or(Word{});
    } else if (c == Component::Infinite) {
        w.kind = Witness::Kind::Lasso;
        w.lasso = *inc.lasso;
        w.cut = inc.cut;
    }
    return w;
}

}  // namespace

Verdict check(const PreorderId& id, const Term& p, const Term& q, Mode mode, const CheckOptions& opts) {
    if (id.direction == Direction::May) {
        PreorderId must = id;
        must.direction = Direction::Must;
        Verdict v = check(must, q, p, mode, opts);
        v.preorder = id;
        v.note = "evaluated as the inverse of " + must.str() + (v.note.empty() ? "" : "; " + v.note);
        return v;
    }
    if (!is_plain(p) || !is_plain(q)) throw std::invalid_argument("preorders are defined on plain processes");
    SemanticsCache local;
    SemanticsCache& cache = opts.cache ? *opts.cache : local;
    Alphabet alpha(alphabet({p, q}));
    auto ps = cache.semantics(p, mode, alpha, opts.state_cap);
    auto qs = cache.semantics(q, mode, alpha, opts.state_cap);

    using V = ObservationVariant;
    std::vector<std::pair<Component, V>> parts;
    switch (id.base) {
        case BaseOrder::NDFD:
            parts = {{Component::Divergences, V::Plain}, {Component::Infinite, V::Plain}, {Component::Failures, V::DClosed}};
            break;
        case BaseOrder::FDId:
            parts = {{Component::Divergences, V::Plain}, {Component::Infinite, V::DClosed}, {Component::Failures, V::DClosed}};
            break;
        case BaseOrder::FDIBot:
            parts = {{Component::Divergences, V::BotClosed}, {Component::Infinite, V::BotClosed},
                     {Component::Failures, V::BotClosed}};
            break;
        case BaseOrder::TInf: parts = {{Component::Ptr, V::Plain}, {Component::Infinite, V::Plain}}; break;
        case BaseOrder::T: parts = {{Component::Ptr, V::Plain}}; break;
    }
    Verdict v;
    v.preorder = id;
    for (auto [c, variant] : parts) {
        Inclusion inc;
        switch (c) {
            case Component::Divergences: inc = divergences_included(*ps, *qs, variant); break;
            case Component::Infinite:
                inc = infinite_traces_included(*ps, *qs, variant);
                v.note = "infinite traces decided on finite prefixes (finite-state reduction)";
                break;
            case Component::Failures: inc = failures_included(*ps, *qs, variant); break;
            case Component::Ptr: inc = ptr_included(*ps, *qs); break;
            case Component::Stability: break;
        }
        if (inc.included) continue;
        v.holds = false;
        v.failing_component = c;
        v.witness = witness_of(c, inc);
        if (opts.synthesize) v.synthesized_test = synthesize(id.base, c, *v.witness);
        return v;
    }
    if (id.refinement == Refinement::Tau) {
        bool p_stable = ps->lts->stable[ps->lts->initial];
        bool q_stable = qs->lts->stable[qs->lts->initial];
        if (p_stable && !q_stable) {
            v.holds = false;
            v.failing_component = Component::Stability;
            Witness w;
            w.kind = Witness::Kind::Stability;
            v.witness = w;
        }
    }
    return v;
}

const Verdict& AuditResult::at(BaseOrder b, Refinement r) const {
    for (auto& v : table)
        if (v.preorder.base == b && v.preorder.refinement == r) return v;
    throw std::out_of_range("no verdict for " + to_string(b));
}

AuditResult hierarchy_audit(const Term& p, const Term& q, Mode mode, const CheckOptions& opts) {
    SemanticsCache local;
    CheckOptions o = opts;
    if (!o.cache) o.cache = &local;
    AuditResult r;
    const BaseOrder bases[] = {BaseOrder::NDFD, BaseOrder::FDId, BaseOrder::FDIBot, BaseOrder::TInf, BaseOrder::T};
    for (auto ref : {Refinement::Plain, Refinement::Tau})
        for (auto b : bases) r.table.push_back(check({b, ref, Direction::Must}, p, q, mode, o));
    const std::pair<BaseOrder, BaseOrder> arrows[] = {{BaseOrder::NDFD, BaseOrder::FDId},
                                                      {BaseOrder::FDId, BaseOrder::FDIBot},
                                                      {BaseOrder::NDFD, BaseOrder::TInf},
                                                      {BaseOrder::TInf, BaseOrder::T},
                                                      {BaseOrder::FDId, BaseOrder::T}};
    for (auto ref : {Refinement::Plain, Refinement::Tau}) {
        std::string tag = ref == Refinement::Tau ? " (tau)" : "";
        for (auto [fine, coarse] : arrows)
            if (r.at(fine, ref).holds && !r.at(coarse, ref).holds)
                r.violations.push_back(to_string(fine) + " holds but " + to_string(coarse) + " fails" + tag);
        // On finite-state systems these pairs coincide.
        for (auto [a, b] : {std::pair{BaseOrder::NDFD, BaseOrder::FDId}, std::pair{BaseOrder::TInf, BaseOrder::T}})
            if (r.at(a, ref).holds != r.at(b, ref).holds)
                r.violations.push_back(to_string(a) + " and " + to_string(b) + " disagree on a finite-state pair" + tag);
    }
    for (auto b : bases)
        if (r.at(b, Refinement::Tau).holds && !r.at(b, Refinement::Plain).holds)
            r.violations.push_back(to_string(b) + "-tau holds but " + to_string(b) + " fails");
    return r;
}

ClassicalVerdicts classical_verdicts(const Term& p, const Term& q, Mode mode, const CheckOptions& opts) {
    ClassicalVerdicts c;
    c.must = check({BaseOrder::FDIBot, Refinement::Plain, Direction::Must}, p, q, mode, opts);
    c.must.note = "must testing coincides with nonnegative reward testing (FDI_bot)";
    c.may = check({BaseOrder::T, Refinement::Plain, Direction::May}, p, q, mode, opts);
    c.may.note = "may testing is the inverse of nonpositive single-penalty reward testing (T); " + c.may.note;
    return c;
}

}  // namespace rewardtest
