#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <string>

namespace rewardtest {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

/** Parses "3", "-1", "+2", "3/2", "-7/4". Throws std::invalid_argument. */
Rational parse_rational(const std::string& text);

/** A rational extended with -inf and +inf. */
class ExtendedReward {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    ExtendedReward() = default;
    ExtendedReward(Rational q) : kind_(Kind::Finite), value_(q) {}  // NOLINT
    ExtendedReward(std::int64_t q) : kind_(Kind::Finite), value_(q) {}  // NOLINT

    static ExtendedReward neg_inf() { return ExtendedReward(Kind::NegInf); }
    static ExtendedReward pos_inf() { return ExtendedReward(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    /** Only meaningful when finite(). */
    const Rational& value() const { return value_; }

    ExtendedReward operator-() const;
    friend ExtendedReward operator+(const ExtendedReward& a, const ExtendedReward& b);

    friend bool operator==(const ExtendedReward& a, const ExtendedReward& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend bool operator<(const ExtendedReward& a, const ExtendedReward& b);
    friend bool operator<=(const ExtendedReward& a, const ExtendedReward& b) { return !(b < a); }
    friend bool operator>(const ExtendedReward& a, const ExtendedReward& b) { return b < a; }
    friend bool operator>=(const ExtendedReward& a, const ExtendedReward& b) { return !(a < b); }

    /** "-inf", "+inf" or the rational. */
    std::string str() const;

private:
    explicit ExtendedReward(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Finite;
    Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExtendedReward& r);

}  // namespace rewardtest
