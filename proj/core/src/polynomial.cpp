#include "stabctab/polynomial.hpp"

#include "stabctab/error.hpp"

#include <cctype>
#include <sstream>

namespace stabctab {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UniPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::mul(const UniPoly& f, const UniPoly& g, int limit) {
    if (f.is_zero() || g.is_zero()) return {};
    std::size_t n = f.coeffs_.size() + g.coeffs_.size() - 1;
    if (limit >= 0) n = std::min(n, static_cast<std::size_t>(limit));
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < f.coeffs_.size() && i < n; ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size() && i + j < n; ++j) {
            out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& f, const UniPoly& g) {
    std::vector<Rational> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) out[i] += f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) out[i] += g.coeffs_[i];
    return UniPoly(std::move(out));
}

Poly2::Poly2(Terms terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

Poly2 Poly2::constant(const Rational& c) { return Poly2(Terms{{{0, 0}, c}}); }
Poly2 Poly2::x() { return Poly2(Terms{{{1, 0}, Rational(1)}}); }
Poly2 Poly2::y() { return Poly2(Terms{{{0, 1}, Rational(1)}}); }

void Poly2::add_term(std::pair<int, int> e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Poly2::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

int Poly2::order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int td = e.first + e.second;
        d = d < 0 ? td : std::min(d, td);
    }
    return d;
}

Poly2 Poly2::dx() const {
    Poly2 out;
    for (const auto& [e, c] : terms_) {
        if (e.first > 0) out.add_term({e.first - 1, e.second}, c * e.first);
    }
    return out;
}

Poly2 Poly2::dy() const {
    Poly2 out;
    for (const auto& [e, c] : terms_) {
        if (e.second > 0) out.add_term({e.first, e.second - 1}, c * e.second);
    }
    return out;
}

Poly2 operator+(const Poly2& f, const Poly2& g) {
    Poly2 out = f;
    for (const auto& [e, c] : g.terms_) out.add_term(e, c);
    return out;
}

Poly2 operator-(const Poly2& f, const Poly2& g) { return f + Rational(-1) * g; }

Poly2 operator*(const Rational& k, const Poly2& f) {
    Poly2 out;
    for (const auto& [e, c] : f.terms_) out.add_term(e, k * c);
    return out;
}

Poly2 operator*(const Poly2& f, const Poly2& g) {
    Poly2 out;
    for (const auto& [ef, cf] : f.terms_) {
        for (const auto& [eg, cg] : g.terms_) {
            out.add_term({ef.first + eg.first, ef.second + eg.second}, cf * cg);
        }
    }
    return out;
}

Poly2 Poly2::linear_substitute(const Rational& l11, const Rational& l12, const Rational& l21,
                               const Rational& l22) const {
    const Poly2 u = l11 * x() + l12 * y();
    const Poly2 v = l21 * x() + l22 * y();
    const int deg = degree();
    std::vector<Poly2> upow{constant(Rational(1))}, vpow{constant(Rational(1))};
    for (int k = 1; k <= deg; ++k) {
        upow.push_back(upow.back() * u);
        vpow.push_back(vpow.back() * v);
    }
    Poly2 out;
    for (const auto& [e, c] : terms_) {
        out = out + c * (upow[static_cast<std::size_t>(e.first)] * vpow[static_cast<std::size_t>(e.second)]);
    }
    return out;
}

UniPoly Poly2::compose(const UniPoly& xt, const UniPoly& yt, int limit) const {
    const int deg = degree();
    std::vector<UniPoly> xpow{UniPoly({Rational(1)})}, ypow{UniPoly({Rational(1)})};
    for (int k = 1; k <= deg; ++k) {
        xpow.push_back(UniPoly::mul(xpow.back(), xt, limit));
        ypow.push_back(UniPoly::mul(ypow.back(), yt, limit));
    }
    UniPoly out;
    for (const auto& [e, c] : terms_) {
        UniPoly term = UniPoly::mul(xpow[static_cast<std::size_t>(e.first)],
                                    ypow[static_cast<std::size_t>(e.second)], limit);
        out = out + UniPoly::mul(UniPoly({c}), term, limit);
    }
    return out;
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

    // Each parsed term is a coefficient and one exponent per variable.
    std::vector<std::pair<Rational, std::vector<int>>> parse() {
        std::vector<std::pair<Rational, std::vector<int>>> terms;
        skip_ws();
        if (at_end()) fail("empty expression");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = next() == '-' ? -1 : 1;
        }
        terms.push_back(term(sign));
        skip_ws();
        while (!at_end()) {
            const char op = next();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
            terms.push_back(term(op == '-' ? -1 : 1));
            skip_ws();
        }
        return terms;
    }

private:
    std::pair<Rational, std::vector<int>> term(int sign) {
        Rational coeff(sign);
        std::vector<int> exps(vars_.size(), 0);
        factor(coeff, exps);
        skip_ws();
        while (!at_end() && peek() == '*') {
            next();
            factor(coeff, exps);
            skip_ws();
        }
        return {coeff, exps};
    }

    void factor(Rational& coeff, std::vector<int>& exps) {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            skip_ws();
            if (!at_end() && peek() == '/') {
                next();
                skip_ws();
                Integer den = integer();
                if (den == 0) fail("zero denominator");
                coeff *= Rational(num, den);
            } else {
                coeff *= Rational(num);
            }
            return;
        }
        const auto idx = vars_.find(c);
        if (idx == std::string_view::npos) fail(std::string("unexpected character '") + c + "'");
        next();
        skip_ws();
        int power = 1;
        if (!at_end() && peek() == '^') {
            next();
            skip_ws();
            const Integer p = integer();
            if (p > 1000) fail("exponent too large");
            power = static_cast<int>(p);
        }
        exps[idx] += power;
    }

    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 4000) fail("integer literal too long");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char next() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::string_view vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly2(std::string_view text) {
    Poly2 out;
    for (auto& [c, exps] : TermParser(text, "xy").parse()) {
        out = out + Poly2(Poly2::Terms{{{exps[0], exps[1]}, c}});
    }
    return out;
}

UniPoly parse_unipoly(std::string_view text, char var) {
    const char vars[2] = {var, '\0'};
    UniPoly out;
    for (auto& [c, exps] : TermParser(text, std::string_view(vars, 1)).parse()) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(exps[0]) + 1);
        coeffs.back() = c;
        out = out + UniPoly(std::move(coeffs));
    }
    return out;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& monomial) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    if (monomial.empty()) {
        os << to_string(mag);
    } else if (mag == 1) {
        os << monomial;
    } else {
        os << to_string(mag) << "*" << monomial;
    }
}

std::string power(char var, int e) {
    if (e == 0) return {};
    std::string s(1, var);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

std::string to_string(const Poly2& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::string mono = power('x', e.first);
        const std::string ypart = power('y', e.second);
        if (!ypart.empty()) mono += (mono.empty() ? "" : "*") + ypart;
        append_term(os, first, c, mono);
        first = false;
    }
    return os.str();
}

std::string to_string(const UniPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        append_term(os, first, f.coeff(i), power(var, i));
        first = false;
    }
    return os.str();
}

}  // namespace stabctab
