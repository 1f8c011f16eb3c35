#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "tropcomm/errors.hpp"

namespace tropcomm {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Element of the max-plus carrier R ∪ {-inf}. -inf (Bottom) is the additive
// identity and multiplicatively absorbing. There is no +inf in the carrier.
class ExtReal {
public:
    ExtReal() : finite_(false) {} // Bottom
    ExtReal(Rational v) : finite_(true), value_(std::move(v)) {}
    ExtReal(long long v) : finite_(true), value_(v) {}
    ExtReal(int v) : finite_(true), value_(v) {}

    static ExtReal bottom() { return ExtReal(); }

    bool is_bottom() const { return !finite_; }
    bool is_finite() const { return finite_; }

    const Rational& value() const {
        if (!finite_) throw DomainError("value() on -inf");
        return value_;
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (!a.finite_) return b.finite_; // bottom < finite, bottom == bottom
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

private:
    bool finite_;
    Rational value_;
};

// Tropical addition: max, with -inf neutral.
inline ExtReal t_add(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

// Tropical multiplication: +, with -inf absorbing.
inline ExtReal t_mul(const ExtReal& a, const ExtReal& b) {
    if (a.is_bottom() || b.is_bottom()) return ExtReal::bottom();
    return ExtReal(a.value() + b.value());
}

inline ExtReal t_neg(const ExtReal& a) {
    // Negation of a finite value; -(-inf) would be +inf, which the carrier lacks.
    return ExtReal(-a.value());
}

inline ExtReal t_min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }

// "-inf", integers as plain integers, other rationals as "p/q".
std::string to_string(const ExtReal& a);
std::string to_string(const Rational& r);

// Accepts "-inf", integers, decimals ("-2.5"), and fractions ("p/q"). Exact.
ExtReal parse_ext_real(std::string_view token, const std::string& where = "value");
Rational parse_rational(std::string_view token, const std::string& where = "value");

} // namespace tropcomm
