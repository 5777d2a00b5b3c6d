#include "rewardtest/axioms.hpp"
#include "rewardtest/parser.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace rewardtest;

namespace {

const SoundnessReport& cell(const std::vector<SoundnessReport>& m, const std::string& ax, const std::string& pre) {
    for (auto& r : m)
        if (r.axiom == ax && r.preorder.str() == pre) return r;
    throw std::runtime_error("missing cell " + ax + " " + pre);
}

}  // namespace

TEST_CASE("schemas parse", "[axioms]") {
    CHECK(axiom_schemas().size() == 11);
    auto& r2 = axiom("R2");
    CHECK(r2.uses_alpha);
    CHECK(r2.vars == std::vector<std::string>{"X", "Y", "Z"});
    CHECK_FALSE(axiom("RP1").equation);
    CHECK_THROWS(axiom("R9"));
}

TEST_CASE("instantiation", "[axioms]") {
    AxiomInstance inst;
    inst.subst = {{"X", parse("a")}, {"Y", parse("b")}};
    auto [l, r] = instantiate(axiom("RP1"), inst);
    CHECK(same(l, parse("tau.a + b")));
    CHECK(same(r, parse("tau.(a + b)")));
    inst.subst.erase("Y");
    CHECK_THROWS(instantiate(axiom("RP1"), inst));
}

TEST_CASE("small terms are distinct and grow", "[axioms]") {
    auto t1 = small_terms(1), t2 = small_terms(2);
    CHECK(t1.size() == 5);  // 0, a, b, tau, delta(0)
    CHECK(t2.size() > t1.size());
    std::set<std::string> keys;
    for (auto& t : t2) keys.insert(t->key);
    CHECK(keys.size() == t2.size());
    for (auto& a : axiom_schemas()) CHECK(default_corpus(a, 1500).size() <= 1500);
}

TEST_CASE("soundness matrix", "[axioms]") {
    auto m = audit_matrix(default_audit_preorders());
    for (auto ax : {"R1", "R2", "R3", "RP1", "RP2", "R4"}) CHECK(cell(m, ax, "NDFD-tau").sound_on_sample);
    auto& r5 = cell(m, "R5", "NDFD-tau");
    REQUIRE_FALSE(r5.sound_on_sample);
    std::set<std::string> pair = {print(*r5.lhs), print(*r5.rhs)};
    CHECK(pair == std::set<std::string>{print(parse("delta(a)")), print(parse("delta(0)"))});
    CHECK_FALSE(cell(m, "delta_id", "NDFD-tau").sound_on_sample);
    CHECK(cell(m, "R5", "FDI_bot-tau").sound_on_sample);
    CHECK(cell(m, "tau_id", "T").sound_on_sample);
    CHECK_FALSE(cell(m, "tau_id", "NDFD-tau").sound_on_sample);
    std::string md = matrix_markdown(m);
    CHECK(md.find("| R5 |") != std::string::npos);
}
