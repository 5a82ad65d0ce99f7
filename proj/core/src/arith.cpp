#include "stabctab/arith.hpp"

#include "stabctab/error.hpp"

#include <cctype>

namespace stabctab {

Integer floor(const Rational& r) {
    Integer q = numerator(r) / denominator(r);  // truncates toward zero
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) {
        q -= 1;
    }
    return q;
}

Integer ceil(const Rational& r) { return -floor(-r); }

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
    if (is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
    }
    Integer value(std::string(text.substr(pos)));
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("denominator must be an unsigned integer in '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text, text);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

}  // namespace stabctab
