#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace rewardtest {

/** Strongly connected components. comp[v] is a component id; ids are in reverse topological order. */
struct Scc {
    std::vector<int> comp;
    int count = 0;
    /** Component has a cycle: more than one node or a self loop. */
    std::vector<bool> cyclic;
};

/** adj[v] lists successors of v. */
Scc strongly_connected(const std::vector<std::vector<int>>& adj);

/** Nodes that can reach some seed (seeds included), following adj forwards. */
std::vector<bool> can_reach(const std::vector<std::vector<int>>& adj, const std::vector<bool>& seeds);

/** Nodes reachable from the sources. */
std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, const std::vector<int>& sources);

/** Small dense bit set with hashing; used for subset constructions. */
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }
    /** Every set bit of *this is set in o. */
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    std::vector<int> members() const {
        std::vector<int> r;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) r.push_back(static_cast<int>(i));
        return r;
    }
    friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator<(const Bits& a, const Bits& b) { return a.w_ < b.w_; }
    std::size_t hash() const {
        std::size_t h = n_;
        for (auto x : w_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(x);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace rewardtest
