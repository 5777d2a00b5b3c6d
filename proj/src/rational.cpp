#include "rewardtest/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rewardtest {

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(const std::string& s, bool allow_sign) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad number: " + s);
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad number: " + s);
        if (v > (INT64_MAX - 9) / 10) throw std::invalid_argument("number too large: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, true));
    std::int64_t num = parse_int(text.substr(0, slash), true);
    std::int64_t den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
}

ExtendedReward ExtendedReward::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        default: return ExtendedReward(-value_);
    }
}

ExtendedReward operator+(const ExtendedReward& a, const ExtendedReward& b) {
    using K = ExtendedReward::Kind;
    if ((a.kind_ == K::NegInf && b.kind_ == K::PosInf) || (a.kind_ == K::PosInf && b.kind_ == K::NegInf))
        throw std::domain_error("-inf + +inf is undefined");
    if (a.kind_ != K::Finite) return a;
    if (b.kind_ != K::Finite) return b;
    return ExtendedReward(a.value_ + b.value_);
}

bool operator<(const ExtendedReward& a, const ExtendedReward& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == ExtendedReward::Kind::Finite && a.value_ < b.value_;
}

std::string ExtendedReward::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        default: return to_string(value_);
    }
}

std::ostream& operator<<(std::ostream& os, const ExtendedReward& r) { return os << r.str(); }

}  // namespace rewardtest
