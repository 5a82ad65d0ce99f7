#include "stabctab/series.hpp"

#include <sstream>

namespace stabctab {

std::string to_string(Exponent e) {
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

std::vector<Exponent> LaurentQT::keys_up_to(int window) {
    std::vector<Exponent> keys;
    for (int a = 0; 2 * a - a <= window; ++a) {
        for (int b = -a; 2 * a + b <= window; ++b) keys.push_back({a, b});
    }
    std::sort(keys.begin(), keys.end(), WeightOrder<LaurentQT>{});
    return keys;
}

void LaurentQT::reject(Exponent e) {
    throw LaurentBoundViolated("q^" + std::to_string(e.a) + " t^" + std::to_string(e.b) +
                               " violates a >= 0, b >= -a");
}

std::vector<Exponent> GoettscheZW::keys_up_to(int window) {
    std::vector<Exponent> keys;
    for (int b = 0; b <= window; ++b) {
        for (int a = 0; a <= 4 * b; ++a) keys.push_back({a, b});
    }
    std::sort(keys.begin(), keys.end(), WeightOrder<GoettscheZW>{});
    return keys;
}

void GoettscheZW::reject(Exponent e) {
    throw LaurentBoundViolated("z^" + std::to_string(e.a) + " w^" + std::to_string(e.b) +
                               " lies outside 0 <= z-degree <= 4 * w-degree");
}

TruncatedBiSeries substitute_zw_to_qt(const GoettscheSeries& g, int order) {
    if (g.order() < 2 * order) {
        throw OrderMismatch("substitution to order " + std::to_string(order) + " needs a source of w-order >= " +
                            std::to_string(2 * order) + ", got " + std::to_string(g.order()));
    }
    TruncatedBiSeries out(order);
    for (const auto& [e, c] : g.terms()) {
        const Exponent image{e.b, e.a - e.b};  // z^i w^n -> q^n t^(i-n)
        if (!LaurentQT::admissible(image)) LaurentQT::reject(image);
        out.accumulate(image, c);
    }
    return out;
}

namespace {

void append_monomial(std::string& out, const char* var, int exp) {
    if (exp == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

template <class Grading>
std::string to_string(const BiSeries<Grading>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        append_monomial(mono, Grading::first, e.a);
        append_monomial(mono, Grading::second, e.b);
        if (mono.empty()) os << to_string(mag);
        else if (mag == 1) os << mono;
        else os << to_string(mag) << "*" << mono;
    }
    return os.str();
}

template std::string to_string(const TruncatedBiSeries&);
template std::string to_string(const GoettscheSeries&);

}  // namespace stabctab
