#include "tropcomm/ext_real.hpp"

#include <cctype>

namespace tropcomm {

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const ExtReal& a) {
    if (a.is_bottom()) return "-inf";
    return to_string(a.value());
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view token, const std::string& where) {
    std::string_view s = token;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    auto fail = [&]() -> Rational {
        throw ParseError(where, "bad numeric token '" + std::string(token) + "'");
    };

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        BigInt d{std::string(den)};
        if (d == 0) return fail();
        Rational r(BigInt{std::string(num)}, d);
        return neg ? Rational(-r) : r;
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || !all_digits(fp)) return fail();
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt whole{std::string(ip)}, frac{std::string(fp)};
        Rational r(whole * scale + frac, scale);
        return neg ? Rational(-r) : r;
    }
    if (!all_digits(s)) return fail();
    Rational r{BigInt{std::string(s)}};
    return neg ? Rational(-r) : r;
}

ExtReal parse_ext_real(std::string_view token, const std::string& where) {
    if (token == "-inf") return ExtReal::bottom();
    return ExtReal(parse_rational(token, where));
}

} // namespace tropcomm
