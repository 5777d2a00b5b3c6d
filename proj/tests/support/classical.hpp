#pragma once

// Classical may / must outcome straight from the composed transition system: success states
// offer omega, computations are maximal tau paths, no fairness.

#include "rewardtest/lts.hpp"

#include <vector>

namespace gen {

struct ClassicalOracle {
    bool may = false;
    bool must = false;
};

inline ClassicalOracle classical_oracle(const rewardtest::Term& test, const rewardtest::Term& proc) {
    using namespace rewardtest;
    Lts l = explore(compose(test, proc));
    const int n = int(l.size());
    std::vector<bool> success(n, false);
    std::vector<std::vector<int>> tau(n);
    for (auto& t : l.transitions) {
        if (t.act.is_omega()) success[t.src] = true;
        if (t.act.is_tau()) tau[t.src].push_back(t.dst);
    }
    // must: least fixpoint of "successful, or stuck nowhere and every tau move leads to must".
    std::vector<bool> must = success;
    for (bool changed = true; changed;) {
        changed = false;
        for (int s = 0; s < n; ++s) {
            if (must[s] || tau[s].empty()) continue;
            bool all = true;
            for (int d : tau[s]) all = all && must[d];
            if (all) must[s] = changed = true;
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {l.initial};
    seen[l.initial] = true;
    bool may = false;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        may = may || success[s];
        for (int d : tau[s])
            if (!seen[d]) {
                seen[d] = true;
                stack.push_back(d);
            }
    }
    return {may, bool(must[l.initial])};
}

}  // namespace gen
