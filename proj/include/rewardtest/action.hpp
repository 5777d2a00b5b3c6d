#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rewardtest {

struct Action {
    enum class Kind : std::uint8_t { Tau, Omega, Name, Coname };

    Kind kind = Kind::Tau;
    std::string base;  // empty for tau and omega

    static Action name(std::string b) { return {Kind::Name, std::move(b)}; }
    static Action coname(std::string b) { return {Kind::Coname, std::move(b)}; }
    static Action tau() { return {Kind::Tau, {}}; }
    static Action omega() { return {Kind::Omega, {}}; }

    bool visible() const { return kind == Kind::Name || kind == Kind::Coname; }
    bool is_tau() const { return kind == Kind::Tau; }
    bool is_omega() const { return kind == Kind::Omega; }

    /** Complement of a visible action; tau and omega map to themselves. */
    Action complement() const;

    /** a, 'a, tau, omega */
    std::string str() const;

    friend bool operator==(const Action& a, const Action& b) { return a.kind == b.kind && a.base == b.base; }
    friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }
    /** tau < omega < visible; visible ordered by base name, then name before coname. */
    friend bool operator<(const Action& a, const Action& b);
};

using Word = std::vector<Action>;

std::string word_str(const Word& w);  // "c g", or "eps" for the empty word

}  // namespace rewardtest
