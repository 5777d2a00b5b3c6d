#pragma once

#include "rewardtest/lts.hpp"
#include "rewardtest/preorder.hpp"
#include "rewardtest/syntax.hpp"

#include <stdexcept>

namespace rewardtest {

struct WitnessMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ClassMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * The distinguishing test for a failed component of a must-style preorder. Tests talk to the
 * process through complements of the witness letters.
 */
Term synthesize(BaseOrder base, Component component, const Witness& w);

/** Class the tests of a preorder must belong to. */
bool in_test_class(BaseOrder base, const TestClass& c);
std::string test_class_name(BaseOrder base);

/** inf_reward(T, P) > inf_reward(T, Q). Throws ClassMismatch if T is outside the preorder's test class. */
bool verify_distinguishes(const Term& test, const Term& p, const Term& q, BaseOrder base, Mode mode,
                          std::size_t state_cap = 10000);

}  // namespace rewardtest
