#ifndef LOWSUM_EXACT_VALUE_HPP
#define LOWSUM_EXACT_VALUE_HPP

#include <cstdint>
#include <string>

namespace lowsum {

// Exact rational with int64 numerator/denominator, kept in lowest terms with
// den > 0. All comparisons cross-multiply in 128 bits; nothing on a decision
// path ever touches floating point. Magnitudes stay far below the int64
// range for every instance size the engine supports (|num| <= 4n^3 with
// n <= 1e5), and arithmetic throws if an intermediate would not reduce back
// into range.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(std::int64_t integer) : num_(integer), den_(1) {} // NOLINT: implicit by design

    static ExactValue ratio(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t as_integer() const; // throws bad_value unless den == 1
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    ExactValue abs() const { return num_ < 0 ? ExactValue(-*this) : *this; }

    ExactValue operator-() const;
    ExactValue operator+(const ExactValue& other) const;
    ExactValue operator-(const ExactValue& other) const;
    ExactValue operator*(const ExactValue& other) const;
    ExactValue operator/(const ExactValue& other) const; // throws on /0

    bool operator==(const ExactValue& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator!=(const ExactValue& other) const { return !(*this == other); }
    bool operator<(const ExactValue& other) const;
    bool operator<=(const ExactValue& other) const { return !(other < *this); }
    bool operator>(const ExactValue& other) const { return other < *this; }
    bool operator>=(const ExactValue& other) const { return !(*this < other); }

    // |a| < |b| without forming the absolute values.
    static bool abs_less(const ExactValue& a, const ExactValue& b);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const; // "3", "-1/2"

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// The configuration rationals (epsilon and the bounds derived from it) are
// the same exact type; the alias just marks intent.
using Rational = ExactValue;

// Parses "3", "-1/2", "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

} // namespace lowsum

#endif
