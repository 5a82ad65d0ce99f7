#pragma once

#include "stabctab/arith.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stabctab {

/// Univariate polynomial in t; coefficient i multiplies t^i. No trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Lowest exponent with a nonzero coefficient, -1 for zero.
    int valuation() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Product truncated modulo t^limit (limit < 0 means no truncation).
    static UniPoly mul(const UniPoly& f, const UniPoly& g, int limit = -1);

    friend UniPoly operator+(const UniPoly& f, const UniPoly& g);
    friend UniPoly operator*(const UniPoly& f, const UniPoly& g) { return mul(f, g); }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Polynomial in x, y with rational coefficients; key (a, b) is x^a y^b.
class Poly2 {
public:
    using Terms = std::map<std::pair<int, int>, Rational>;

    Poly2() = default;
    explicit Poly2(Terms terms);

    static Poly2 constant(const Rational& c);
    static Poly2 x();
    static Poly2 y();

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int a, int b) const;
    /// Total degree; -1 for zero.
    int degree() const;
    /// Lowest total degree of a nonzero term; -1 for zero.
    int order() const;

    Poly2 dx() const;
    Poly2 dy() const;

    /// f(l11 x + l12 y, l21 x + l22 y).
    Poly2 linear_substitute(const Rational& l11, const Rational& l12, const Rational& l21,
                            const Rational& l22) const;

    /// f(x(t), y(t)) modulo t^limit (limit < 0: exact).
    UniPoly compose(const UniPoly& xt, const UniPoly& yt, int limit = -1) const;

    friend Poly2 operator+(const Poly2& f, const Poly2& g);
    friend Poly2 operator-(const Poly2& f, const Poly2& g);
    friend Poly2 operator*(const Poly2& f, const Poly2& g);
    friend Poly2 operator*(const Rational& k, const Poly2& f);
    friend bool operator==(const Poly2&, const Poly2&) = default;

private:
    void add_term(std::pair<int, int> e, const Rational& c);
    Terms terms_;
};

/* Parses sums of terms built from rational constants and variables, e.g.
 * "y^2 - x^3", "3/2*x^2*y + x*y^4", "-x". Grammar (whitespace-insensitive):
 *
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := integer ['/' integer] | var ['^' integer]
 *
 * Repeated factors multiply. Throws ParseError. */
Poly2 parse_poly2(std::string_view text);
UniPoly parse_unipoly(std::string_view text, char var = 't');

std::string to_string(const Poly2& f);
std::string to_string(const UniPoly& f, char var = 't');

}  // namespace stabctab
