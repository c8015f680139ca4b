#include "lowsum/exact_value.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

#include "lowsum/errors.hpp"

namespace lowsum {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value) {
    if (value > Wide(std::numeric_limits<std::int64_t>::max()) ||
        value < Wide(std::numeric_limits<std::int64_t>::min())) {
        throw Error(Errc::bad_value, "exact rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(value);
}

ExactValue make_reduced(Wide num, Wide den) {
    if (den == 0) {
        throw Error(Errc::bad_parameters, "rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return ExactValue::ratio(narrow(num), narrow(den));
}

} // namespace

ExactValue ExactValue::ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw Error(Errc::bad_parameters, "rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    ExactValue v;
    v.num_ = g > 1 ? num / g : num;
    v.den_ = g > 1 ? den / g : den;
    return v;
}

std::int64_t ExactValue::as_integer() const {
    if (den_ != 1) {
        throw Error(Errc::bad_value, "rational " + str() + " is not an integer");
    }
    return num_;
}

ExactValue ExactValue::operator-() const {
    ExactValue v = *this;
    v.num_ = -v.num_;
    return v;
}

ExactValue ExactValue::operator+(const ExactValue& other) const {
    return make_reduced(Wide(num_) * other.den_ + Wide(other.num_) * den_,
                        Wide(den_) * other.den_);
}

ExactValue ExactValue::operator-(const ExactValue& other) const {
    return make_reduced(Wide(num_) * other.den_ - Wide(other.num_) * den_,
                        Wide(den_) * other.den_);
}

ExactValue ExactValue::operator*(const ExactValue& other) const {
    return make_reduced(Wide(num_) * other.num_, Wide(den_) * other.den_);
}

ExactValue ExactValue::operator/(const ExactValue& other) const {
    if (other.num_ == 0) {
        throw Error(Errc::bad_parameters, "division of rational by zero");
    }
    return make_reduced(Wide(num_) * other.den_, Wide(den_) * other.num_);
}

bool ExactValue::operator<(const ExactValue& other) const {
    return Wide(num_) * other.den_ < Wide(other.num_) * den_;
}

bool ExactValue::abs_less(const ExactValue& a, const ExactValue& b) {
    Wide lhs = Wide(a.num_ < 0 ? -a.num_ : a.num_) * b.den_;
    Wide rhs = Wide(b.num_ < 0 ? -b.num_ : b.num_) * a.den_;
    return lhs < rhs;
}

std::string ExactValue::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw Error(Errc::bad_parameters, "empty rational literal");
    }
    auto parse_int = [](const std::string& s) -> std::int64_t {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw Error(Errc::bad_parameters, "bad rational literal '" + s + "'");
        }
        if (pos != s.size()) {
            throw Error(Errc::bad_parameters, "bad rational literal '" + s + "'");
        }
        return v;
    };

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        return ExactValue::ratio(parse_int(text.substr(0, slash)),
                                 parse_int(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || frac_len > 15) {
            throw Error(Errc::bad_parameters, "bad rational literal '" + text + "'");
        }
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return ExactValue::ratio(parse_int(digits), den);
    }
    return ExactValue(parse_int(text));
}

} // namespace lowsum
