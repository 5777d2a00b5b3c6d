#pragma once

#include "rewardtest/lts.hpp"
#include "rewardtest/term.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace rewardtest {

/**
 * Least predicate with: every prefix converges (tau included), a sum converges when all branches
 * do, |, restriction and relabelling when their operands do, rec when its unfolding does.
 * false means strongly unguarded recursion.
 */
bool converges(const Term& t);

/** Returns the first of "fresh", "fresh1", ... not in used. */
std::string fresh_name(const std::set<std::string>& used);

/** All base names of the terms plus one reserved fresh name. */
std::set<std::string> alphabet(const std::vector<Term>& terms);

enum class Tri : std::uint8_t { No, Yes, Unknown };
std::string to_string(Tri t);

struct TestClass {
    Tri well_behaved = Tri::Unknown;
    Tri finite_penalty = Tri::Unknown;
    Tri single_penalty = Tri::Unknown;
    Tri nonnegative = Tri::Unknown;
    Tri nonpositive = Tri::Unknown;
};

/** Flags from the reachable transition graph of the test; all Unknown if the cap is hit. */
TestClass classify_test(const Term& t, std::size_t state_cap = 10000);
TestClass classify_lts(const Lts& lts);

}  // namespace rewardtest
