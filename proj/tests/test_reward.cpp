#include "rewardtest/parser.hpp"
#include "rewardtest/reward.hpp"
#include "support/classical.hpp"
#include "support/gen.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rewardtest;

namespace {

ExtendedReward inf(const char* t, const char* p, Mode m = Mode::Ccs) {
    return inf_reward(parse(t), parse(p), m).infimum;
}

std::vector<Rational> q(std::initializer_list<int> v) {
    std::vector<Rational> r;
    for (int x : v) r.emplace_back(x);
    return r;
}

}  // namespace

TEST_CASE("computation values", "[reward]") {
    CHECK(computation_value(q({-1, 1}), {}, false) == ExtendedReward(0));
    CHECK(computation_value(q({0}), q({0}), true) == ExtendedReward(0));
    CHECK(computation_value(q({-1}), q({0}), true) == ExtendedReward(-1));
    CHECK(computation_value(q({}), q({-1}), true) == ExtendedReward::neg_inf());
    CHECK(computation_value(q({}), q({1}), true) == ExtendedReward::pos_inf());
    // liminf of 1, 0, 1, 0, ... and of 1, 2, 1, 2, ...
    CHECK(computation_value(q({1}), q({-1, 1}), true) == ExtendedReward(0));
    CHECK(computation_value(q({1}), q({1, -1}), true) == ExtendedReward(1));
    CHECK_THROWS(computation_value(q({1}), q({}), true));
}

TEST_CASE("worked infima", "[reward]") {
    CHECK(inf("'c[-1].'g[1]", "delta(c + c.g)") == ExtendedReward(-1));
    CHECK(inf("'c[-1].'g[1]", "delta(c.g)") == ExtendedReward(0));
    CHECK(inf("'c.'g[1]", "c.g") == ExtendedReward(1));
    CHECK(inf("'c.'g[1]", "c + c.g") == ExtendedReward(0));
    CHECK(inf("'a.tau[-1]", "delta(0)") == ExtendedReward(0));
    CHECK(inf("'a.tau[-1]", "delta(a)") == ExtendedReward(-1));
    CHECK(inf("rec X { X = tau[-1].X }", "0") == ExtendedReward::neg_inf());
    CHECK(inf("rec X { X = tau[1].X }", "0") == ExtendedReward::pos_inf());
    CHECK(inf("0", "a.b") == ExtendedReward(0));
}

TEST_CASE("ill-behaved tests are refused", "[reward]") {
    CHECK_THROWS_AS(inf_reward(parse("rec X { X = tau[1].tau[-1].X }"), nil(), Mode::Ccs), NotWellBehaved);
}

TEST_CASE("infimum matches path enumeration", "[reward]") {
    gen::Rng r(31);
    int infinite_cases = 0;
    for (int i = 0; i < 400; ++i) {
        WeightedGraph g = gen::random_weighted_graph(r);
        ExtendedReward expect = gen::brute_infimum(g);
        InfimumResult got = infimum(g);
        CHECK(got.value == expect);
        infinite_cases += !expect.finite();
        if (!got.value.is_neg_inf()) CHECK(computation_value(g, got.witness) == got.value);
    }
    CHECK(infinite_cases > 0);
}

TEST_CASE("smyth order is infimum comparison", "[reward]") {
    Term t = parse("'c[-1].'g[1]");
    Term p = parse("delta(c.g)"), q2 = parse("delta(c + c.g)");
    CHECK_FALSE(smyth_leq(t, p, q2, Mode::Ccs));
    CHECK(smyth_leq(t, q2, p, Mode::Ccs));
    CHECK(smyth_leq(t, p, p, Mode::Ccs));
    CHECK(smyth_leq(parse("'a.'b.'c"), p, q2, Mode::Ccs));
}

TEST_CASE("classical outcomes without fairness", "[reward]") {
    auto o = classical_apply(parse("tau.omega"), parse("rec X { X = tau.X }"), Mode::Ccs);
    CHECK(o.may_success);
    CHECK_FALSE(o.must_success);
    o = classical_apply(parse("tau.omega"), nil(), Mode::Ccs);
    CHECK(o.must_success);
    o = classical_apply(parse("omega"), nil(), Mode::Ccs);
    CHECK(o.may_success);
    CHECK(o.must_success);
    o = classical_apply(nil(), parse("a"), Mode::Ccs);
    CHECK_FALSE(o.may_success);
    CHECK_FALSE(o.must_success);
}

TEST_CASE("emulated must testing agrees with the classical outcome", "[reward]") {
    gen::Rng r(37);
    gen::ShapeOptions small;
    for (int i = 0; i < 200; ++i) {
        Term t = gen::random_test(r, small, [] { return Rational{0}; }, 0.2);
        Term p = gen::related_process(r, gen::random_process(r));
        auto oracle = gen::classical_oracle(t, p);
        auto lib = classical_apply(t, p, Mode::Ccs);
        INFO("T = " << print(t) << "\nP = " << print(p));
        CHECK(lib.may_success == oracle.may);
        CHECK(lib.must_success == oracle.must);
        auto em = emulate_must(t);
        CHECK((inf_reward(em.test, p, Mode::Ccs).infimum >= ExtendedReward(em.threshold)) == oracle.must);
        auto dual = emulate_dual_must(t);
        CHECK((inf_reward(dual.test, p, Mode::Ccs).infimum >= ExtendedReward(dual.threshold)) == !oracle.may);
    }
}

TEST_CASE("emulation shapes", "[reward]") {
    auto em = emulate_must(parse("'c.omega"));
    CHECK(inf_reward(em.test, parse("c"), Mode::Ccs).infimum == ExtendedReward(1));
    CHECK(inf_reward(em.test, nil(), Mode::Ccs).infimum == ExtendedReward(0));
    auto tw = emulate_must(parse("tau.omega"));
    CHECK(inf_reward(tw.test, parse("rec X { X = tau.X }"), Mode::Ccs).infimum == ExtendedReward(0));
    CHECK(classify_test(em.test).nonnegative == Tri::Yes);
    CHECK(classify_test(emulate_dual_must(parse("'c.omega")).test).nonpositive == Tri::Yes);
}

TEST_CASE("negated tests", "[reward]") {
    CHECK(same(negate_test(parse("'c[-1].'g[1]")), parse("'c[1].'g[-1]")));
    // Unknown well-behavedness is accepted by negation but refused by the engine.
    Term odd = parse("rec X { X = tau[1].tau[-1].X }");
    CHECK_NOTHROW(negate_test(odd));
    CHECK_THROWS_AS(inf_reward(negate_test(odd), nil(), Mode::Ccs), NotWellBehaved);
    gen::Rng r(41);
    for (int i = 0; i < 150; ++i) {
        Term t = gen::random_class_test(r, i % 2 ? BaseOrder::FDIBot : BaseOrder::NDFD);
        Term neg = negate_test(t);
        CHECK(same(negate_test(neg), t));
        Term p = gen::related_process(r, gen::random_process(r));
        // inf(-T, P) is minus the supremum over the computations of T | P.
        auto s = inf_reward(t, p, Mode::Ccs);
        WeightedGraph flipped = s.graph->graph;
        for (auto& e : flipped.edges) e.weight = -e.weight;
        INFO("T = " << print(t) << "\nP = " << print(p));
        CHECK(inf_reward(neg, p, Mode::Ccs).infimum == gen::brute_infimum(flipped));
    }
}
