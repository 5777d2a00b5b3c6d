// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include "rewardtest/axioms.hpp"
#include "rewardtest/parser.hpp"
#include "rewardtest/preorder.hpp"
#include "rewardtest/properties.hpp"
#include "rewardtest/reward.hpp"
#include "rewardtest/synthesis.hpp"
#include "support/classical.hpp"
#include "support/gen.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace rewardtest;

namespace {

constexpr int kPairs = 500;
constexpr int kTestsPerPair = 50;
constexpr int kClassicalPairs = 500;
constexpr int kGraphs = 1000;

const BaseOrder kBases[] = {BaseOrder::NDFD, BaseOrder::FDId, BaseOrder::FDIBot, BaseOrder::TInf, BaseOrder::T};

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failure messages from worker threads; keeps the first few for the report.
struct Failures {
    std::mutex mu;
    std::vector<std::string> msgs;
    std::size_t count = 0;
    void add(std::string m) {
        std::lock_guard<std::mutex> lock(mu);
        ++count;
        if (msgs.size() < 3) msgs.push_back(std::move(m));
    }
    std::string str() const {
        std::string s;
        for (auto& m : msgs) s += "\n      " + m;
        return s;
    }
};

void parallel_for(int n, const std::function<void(int)>& body) {
    unsigned k = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < k; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) body(i);
        });
    for (auto& t : pool) t.join();
}

Term P(const char* s) { return parse(s); }

Verdict verdict(BaseOrder b, const Term& p, const Term& q, Mode m = Mode::Ccs, Refinement r = Refinement::Plain,
                Direction d = Direction::Must) {
    return check({b, r, d}, p, q, m);
}

ExtendedReward inf(const Term& t, const Term& p, Mode m = Mode::Ccs) { return inf_reward(t, p, m).infimum; }

std::string show(const ExtendedReward& r) { return r.str(); }

// ---------------------------------------------------------------------------------------------
// Worked examples

Outcome finite_penalty_separation() {
    Term p = P("delta(c.g)"), q = P("delta(c + c.g)");
    Outcome o;
    bool must_eq = verdict(BaseOrder::FDIBot, p, q).holds && verdict(BaseOrder::FDIBot, q, p).holds;
    bool may_eq = verdict(BaseOrder::T, p, q).holds && verdict(BaseOrder::T, q, p).holds;
    Verdict d = verdict(BaseOrder::FDId, p, q);
    o.pass = must_eq && may_eq && !d.holds && d.synthesized_test;
    std::ostringstream os;
    os << "FDI_bot both ways " << must_eq << ", T both ways " << may_eq << ", FDI_d " << (d.holds ? "holds" : "fails");
    if (d.synthesized_test) {
        auto a = inf(*d.synthesized_test, p), b = inf(*d.synthesized_test, q);
        o.pass = o.pass && a == ExtendedReward(0) && b == ExtendedReward(-1) &&
                 in_test_class(BaseOrder::FDId, classify_test(*d.synthesized_test));
        os << "; test " << print(*d.synthesized_test) << " infima " << show(a) << " vs " << show(b);
    }
    o.detail = os.str();
    return o;
}

Outcome nonnegative_separation() {
    Term p = P("c.g"), q = P("c + c.g"), t = P("'c.'g[1]");
    bool may_eq = verdict(BaseOrder::T, p, q).holds && verdict(BaseOrder::T, q, p).holds;
    Verdict b = verdict(BaseOrder::FDIBot, p, q);
    auto x = inf(t, p), y = inf(t, q);
    bool synth = b.synthesized_test && verify_distinguishes(*b.synthesized_test, p, q, BaseOrder::FDIBot, Mode::Ccs);
    Outcome o;
    o.pass = may_eq && !b.holds && synth && x == ExtendedReward(1) && y == ExtendedReward(0);
    o.detail = "T both ways " + std::to_string(may_eq) + ", FDI_bot " + (b.holds ? "holds" : "fails") +
               ", test " + print(t) + " infima " + show(x) + " vs " + show(y) + ", synthesized test verified " +
               std::to_string(synth);
    return o;
}

Outcome nonpositive_separation() {
    Term da = P("delta(a)"), d0 = P("delta(0)"), t = P("'a.tau[-1]");
    bool must_eq = verdict(BaseOrder::FDIBot, da, d0).holds && verdict(BaseOrder::FDIBot, d0, da).holds;
    Verdict bad = verdict(BaseOrder::T, d0, da);
    Verdict good = verdict(BaseOrder::T, da, d0);
    bool witness = bad.witness && word_str(bad.witness->trace) == "a";
    auto x = inf(t, d0), y = inf(t, da);
    Outcome o;
    o.pass = must_eq && !bad.holds && good.holds && witness && x == ExtendedReward(0) && y == ExtendedReward(-1);
    o.detail = "FDI_bot both ways " + std::to_string(must_eq) + "; delta(0) below delta(a) under T: " +
               (bad.holds ? "holds" : "fails") + (witness ? " (witness a)" : "") + "; reverse " +
               (good.holds ? "holds" : "fails") + "; test 'a.tau[-1] infima " + show(x) + " vs " + show(y);
    return o;
}

Outcome coffee() {
    Term c1 = P("tau"), c2 = P("tau.c + tau"), c3 = P("tau.c");
    auto may = [](const Term& a, const Term& b) {
        return verdict(BaseOrder::T, a, b, Mode::Ccs, Refinement::Plain, Direction::May).holds;
    };
    bool may_chain = may(c1, c2) && !may(c2, c1) && may(c2, c3) && may(c3, c2);
    bool must = verdict(BaseOrder::FDIBot, c2, c3).holds && !verdict(BaseOrder::FDIBot, c3, c2).holds;
    WordSet g = WordSet::parse("c");
    bool live = !check_liveness(c1, g).holds && !check_liveness(c2, g).holds && check_liveness(c3, g).holds;
    Outcome o;
    o.pass = may_chain && must && live;
    o.detail = "may chain " + std::to_string(may_chain) + ", must strict " + std::to_string(must) +
               ", liveness {c} only C3 " + std::to_string(live);
    return o;
}

Outcome choice_congruence() {
    bool eq = verdict(BaseOrder::NDFD, P("0"), P("tau")).holds && verdict(BaseOrder::NDFD, P("tau"), P("0")).holds;
    Term p = P("0 + a"), q = P("tau + a");
    Verdict v = verdict(BaseOrder::FDIBot, p, q);
    Alphabet alpha(alphabet({p, q}));
    bool witness = !v.holds && v.witness && v.witness->kind == Witness::Kind::Failure && v.witness->trace.empty() &&
                   v.witness->refusal.size() == alpha.size();
    Outcome o;
    o.pass = eq && witness;
    o.detail = "0 = tau under NDFD " + std::to_string(eq) + "; 0+a vs tau+a under FDI_bot " +
               (v.holds ? "holds" : "fails with " + v.witness->str());
    return o;
}

Outcome unguarded() {
    Term zero = nil(), loop = P("rec X { X = X }"), tloop = P("rec X { X = tau.X }");
    bool all = true;
    for (auto b : kBases)
        for (auto r : {Refinement::Plain, Refinement::Tau})
            for (auto d : {Direction::Must, Direction::May})
                all = all && verdict(b, zero, loop, Mode::Ccs, r, d).holds &&
                      verdict(b, loop, zero, Mode::Ccs, r, d).holds;
    Verdict bot = verdict(BaseOrder::FDIBot, zero, loop, Mode::CcsBot);
    bool bot_ok = !bot.holds && bot.synthesized_test &&
                  verify_distinguishes(*bot.synthesized_test, zero, loop, BaseOrder::FDIBot, Mode::CcsBot);
    // The classical test tau.omega and its emulation separate the two in ccs-bot only.
    Term tw = P("tau.omega");
    auto em = emulate_must(tw);
    bool classical = classical_apply(tw, zero, Mode::CcsBot).must_success &&
                     !classical_apply(tw, loop, Mode::CcsBot).must_success &&
                     classical_apply(tw, loop, Mode::Ccs).must_success;
    bool emulated = inf(em.test, zero, Mode::CcsBot) >= ExtendedReward(em.threshold) &&
                    inf(em.test, loop, Mode::CcsBot) < ExtendedReward(em.threshold);
    bool tau_loop = true;
    for (auto m : {Mode::Ccs, Mode::CcsBot}) {
        Verdict v = verdict(BaseOrder::NDFD, zero, tloop, m);
        tau_loop = tau_loop && !v.holds && v.synthesized_test &&
                   verify_distinguishes(*v.synthesized_test, zero, tloop, BaseOrder::NDFD, m);
    }
    Outcome o;
    o.pass = all && bot_ok && classical && emulated && tau_loop;
    o.detail = "ccs: all preorders identify 0 and rec X=X " + std::to_string(all) + "; ccs-bot FDI_bot fails " +
               std::to_string(bot_ok) + (bot.synthesized_test ? " (test " + print(*bot.synthesized_test) + ")" : "") +
               "; tau.omega classical " + std::to_string(classical) + ", emulated " + std::to_string(emulated) +
               "; rec X=tau.X separated in both modes " + std::to_string(tau_loop);
    return o;
}

// ---------------------------------------------------------------------------------------------
// Property-based criteria

Outcome must_emulation() {
    Failures f;
    std::atomic<int> musts{0}, mays{0};
    gen::ShapeOptions shape{8, 3, 0.25, 0.2};
    parallel_for(kClassicalPairs, [&](int i) {
        gen::Rng r(1000 + i);
        Term t = gen::random_test(r, shape, [] { return Rational{0}; }, 0.15);
        Term p = gen::random_process(r, shape);
        auto oracle = gen::classical_oracle(t, p);
        musts += oracle.must;
        mays += oracle.may;
        auto em = emulate_must(t);
        bool must = inf(em.test, p) >= ExtendedReward(em.threshold);
        if (must != oracle.must) f.add("must: T=" + print(t) + " P=" + print(p));
        auto dual = emulate_dual_must(t);
        bool not_may = inf(dual.test, p) >= ExtendedReward(dual.threshold);
        if (not_may == oracle.may) f.add("dual: T=" + print(t) + " P=" + print(p));
    });
    Outcome o;
    o.pass = f.count == 0;
    o.detail = std::to_string(kClassicalPairs) + " pairs (" + std::to_string(musts.load()) + " must-pass, " +
               std::to_string(mays.load()) + " may-pass), " + std::to_string(f.count) + " mismatches" + f.str();
    return o;
}

struct PairVerdicts {
    Term p, q;
    std::map<std::pair<BaseOrder, Refinement>, Verdict> v;
    bool holds(BaseOrder b, Refinement r = Refinement::Plain) const { return v.at({b, r}).holds; }
};

std::vector<PairVerdicts> build_corpus() {
    std::vector<PairVerdicts> corpus(kPairs);
    gen::ShapeOptions shape{4, 3, 0.25, 0.2};
    parallel_for(kPairs, [&](int i) {
        gen::Rng r(5000 + i);
        Term p = gen::random_process(r, shape);
        Term q = gen::related_process(r, p, shape);
        if (r.chance(0.5)) std::swap(p, q);
        auto& c = corpus[i];
        c.p = p;
        c.q = q;
        SemanticsCache cache;
        CheckOptions opts;
        opts.cache = &cache;
        for (auto b : kBases)
            for (auto ref : {Refinement::Plain, Refinement::Tau})
                c.v.emplace(std::make_pair(b, ref), check({b, ref, Direction::Must}, p, q, Mode::Ccs, opts));
    });
    return corpus;
}

Outcome soundness_loop(const std::vector<PairVerdicts>& corpus) {
    Failures f;
    std::atomic<long> fails{0}, holds{0}, tests_run{0};
    parallel_for(int(corpus.size()), [&](int i) {
        auto& c = corpus[i];
        gen::Rng r(9000 + i);
        for (auto b : kBases) {
            const Verdict& v = c.v.at({b, Refinement::Plain});
            std::string tag = v.preorder.str() + " P=" + print(c.p) + " Q=" + print(c.q);
            if (!v.holds) {
                ++fails;
                if (!v.synthesized_test) {
                    f.add("no test: " + tag);
                    continue;
                }
                const Term& t = *v.synthesized_test;
                if (!in_test_class(b, classify_test(t))) f.add("class: " + tag);
                auto x = inf(t, c.p), y = inf(t, c.q);
                if (!(x > y)) f.add("not distinguished by " + print(t) + ": " + tag);
                continue;
            }
            ++holds;
            for (int k = 0; k < kTestsPerPair; ++k) {
                Term t = gen::random_class_test(r, b);
                ++tests_run;
                auto x = inf(t, c.p), y = inf(t, c.q);
                if (!(x <= y)) f.add("test " + print(t) + " gives " + show(x) + " > " + show(y) + ": " + tag);
            }
        }
    });
    Outcome o;
    o.pass = f.count == 0;
    o.detail = std::to_string(corpus.size()) + " pairs, " + std::to_string(fails.load()) + " failing verdicts verified, " +
               std::to_string(holds.load()) + " holding verdicts x " + std::to_string(kTestsPerPair) + " tests (" +
               std::to_string(tests_run.load()) + " runs), " + std::to_string(f.count) + " counterexamples" + f.str();
    return o;
}

Outcome hierarchy(const std::vector<PairVerdicts>& corpus) {
    const std::pair<BaseOrder, BaseOrder> arrows[] = {{BaseOrder::NDFD, BaseOrder::FDId},
                                                      {BaseOrder::FDId, BaseOrder::FDIBot},
                                                      {BaseOrder::NDFD, BaseOrder::TInf},
                                                      {BaseOrder::TInf, BaseOrder::T},
                                                      {BaseOrder::FDId, BaseOrder::T}};
    Failures f;
    for (auto& c : corpus) {
        std::string tag = " P=" + print(c.p) + " Q=" + print(c.q);
        for (auto ref : {Refinement::Plain, Refinement::Tau}) {
            for (auto [fine, coarse] : arrows)
                if (c.holds(fine, ref) && !c.holds(coarse, ref))
                    f.add(to_string(fine) + " => " + to_string(coarse) + tag);
            if (c.holds(BaseOrder::NDFD, ref) != c.holds(BaseOrder::FDId, ref)) f.add("NDFD <> FDI_d" + tag);
            if (c.holds(BaseOrder::T, ref) != c.holds(BaseOrder::TInf, ref)) f.add("T <> T_inf" + tag);
        }
        for (auto b : kBases)
            if (c.holds(b, Refinement::Tau) && !c.holds(b, Refinement::Plain)) f.add(to_string(b) + " tau => plain" + tag);
    }
    std::map<BaseOrder, int> count;
    for (auto& c : corpus)
        for (auto b : kBases) count[b] += c.holds(b);
    Outcome o;
    o.pass = f.count == 0;
    std::ostringstream os;
    os << corpus.size() << " pairs, holding:";
    for (auto b : kBases) os << " " << to_string(b) << "=" << count[b];
    os << ", " << f.count << " violations" << f.str();
    o.detail = os.str();
    return o;
}

Outcome infimum_oracle() {
    Failures f;
    std::atomic<int> neg{0}, pos{0}, via_terms{0};
    parallel_for(kGraphs, [&](int i) {
        gen::Rng r(20000 + i);
        bool plain = i % 2 == 0;  // no marked endpoints, so the graph is also expressible as a test
        double p_neg = (i / 2) % 2 ? 1.0 / 3 : 0.08;
        WeightedGraph g = gen::random_weighted_graph(r, 10, plain ? 0.0 : 0.15, p_neg);
        ExtendedReward expect = gen::brute_infimum(g);
        neg += expect.is_neg_inf();
        pos += expect.is_pos_inf();
        ExtendedReward got = infimum(g).value;
        if (got != expect) f.add("graph " + std::to_string(i) + ": " + show(got) + " vs " + show(expect));
        if (!plain) return;
        Term t = gen::weighted_graph_test(g);
        if (classify_test(t).well_behaved != Tri::Yes) return;
        ++via_terms;
        ExtendedReward viaterm = inf(t, nil());
        if (viaterm != expect) f.add("term " + print(t) + ": " + show(viaterm) + " vs " + show(expect));
    });
    Outcome o;
    o.pass = f.count == 0;
    o.detail = std::to_string(kGraphs) + " graphs (" + std::to_string(neg.load()) + " -inf, " +
               std::to_string(pos.load()) + " +inf, " + std::to_string(via_terms.load()) +
               " also through inf_reward), " + std::to_string(f.count) + " mismatches" + f.str();
    return o;
}

Outcome axiom_matrix() {
    auto m = audit_matrix(default_audit_preorders());
    auto cell = [&](const std::string& ax, const std::string& pre) -> const SoundnessReport& {
        for (auto& r : m)
            if (r.axiom == ax && r.preorder.str() == pre) return r;
        throw std::runtime_error("missing " + ax);
    };
    Outcome o;
    std::vector<std::string> bad;
    for (auto ax : {"R1", "R2", "R3", "RP1", "RP2", "R4"})
        if (!cell(ax, "NDFD-tau").sound_on_sample) bad.push_back(std::string(ax) + " unsound");
    auto& r5 = cell("R5", "NDFD-tau");
    std::set<std::string> pair;
    if (r5.lhs) pair = {print(*r5.lhs), print(*r5.rhs)};
    if (r5.sound_on_sample || pair != std::set<std::string>{print(P("delta(a)")), print(P("delta(0)"))})
        bad.push_back("R5 counterexample");
    if (cell("delta_id", "NDFD-tau").sound_on_sample) bad.push_back("delta_id sound");
    if (!cell("R5", "FDI_bot-tau").sound_on_sample) bad.push_back("R5 FDI_bot-tau unsound");
    o.pass = bad.empty();
    std::size_t instances = 0;
    for (auto& r : m) instances += r.instances_checked;
    o.detail = std::to_string(m.size()) + " cells, " + std::to_string(instances) + " instances; R5 on NDFD-tau: " +
               (r5.counterexample ? r5.counterexample->str() : "none");
    for (auto& b : bad) o.detail += "; " + b;
    return o;
}

Outcome preservation(const std::vector<PairVerdicts>& corpus) {
    const char* live[] = {"a", "a | b", "b c", "(a | b)* c", "a+ b"};
    const char* safe[] = {"a", "b a", "c c", "(a | b)* c", "a b+"};
    const std::pair<const char*, const char*> cond[] = {{"a", "a b"}, {"b", "b (a | c)"}, {"a | b", "(a | b) c"},
                                                        {"c", "c a*"}};
    Failures f;
    std::atomic<int> premises{0};
    parallel_for(int(corpus.size()), [&](int i) {
        auto& c = corpus[i];
        std::string tag = " P=" + print(c.p) + " Q=" + print(c.q);
        if (c.holds(BaseOrder::FDIBot))
            for (auto g : live) {
                WordSet w = WordSet::parse(g);
                if (!check_liveness(c.p, w).holds) continue;
                ++premises;
                if (!check_liveness(c.q, w).holds) f.add(std::string("liveness ") + g + tag);
            }
        if (c.holds(BaseOrder::T))
            for (auto b : safe) {
                WordSet w = WordSet::parse(b);
                if (!check_safety(c.p, w).holds) continue;
                ++premises;
                if (!check_safety(c.q, w).holds) f.add(std::string("safety ") + b + tag);
            }
        if (c.holds(BaseOrder::FDId))
            for (auto [x, y] : cond) {
                WordSet cw = WordSet::parse(x), gw = WordSet::parse(y);
                if (!check_cond_liveness(c.p, cw, gw).holds) continue;
                ++premises;
                if (!check_cond_liveness(c.q, cw, gw).holds) f.add(std::string("conditional ") + x + " / " + y + tag);
            }
    });
    Outcome o;
    o.pass = f.count == 0;
    o.detail = std::to_string(premises.load()) + " (pair, property) cases with the premise, " +
               std::to_string(f.count) + " violations" + f.str();
    return o;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    int failed = 0;
    auto report = [&](int n, const char* name, const std::function<Outcome()>& run) {
        auto s = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
        std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    };
    report(1, "finite-penalty separation", finite_penalty_separation);
    report(2, "nonnegative separation", nonnegative_separation);
    report(3, "nonpositive separation", nonpositive_separation);
    report(4, "coffee machines", coffee);
    report(5, "choice congruence", choice_congruence);
    report(6, "unguarded recursion", unguarded);
    report(7, "must emulation", must_emulation);
    std::vector<PairVerdicts> corpus;
    auto s = std::chrono::steady_clock::now();
    corpus = build_corpus();
    std::printf("     corpus of %d pairs checked under 10 preorders [%.1fs]\n", kPairs,
                std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count());
    report(8, "soundness loop", [&] { return soundness_loop(corpus); });
    report(9, "hierarchy", [&] { return hierarchy(corpus); });
    report(10, "infimum oracle", infimum_oracle);
    report(11, "axiom matrix", axiom_matrix);
    report(12, "property preservation", [&] { return preservation(corpus); });
    std::printf("%d of 12 criteria passed in %.1fs\n", 12 - failed,
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return failed == 0 ? 0 : 1;
}
