#pragma once

#include "stabctab/arith.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace stabctab {

/* Exact real number p + q * sqrt(n) with p, q rational and n a squarefree
 * positive integer (n = 1 whenever q = 0). All comparisons are decided by
 * squaring, never by floating point. */
class Surd {
public:
    Surd() = default;
    Surd(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    Surd(long long p) : p_(p) {}            // NOLINT(google-explicit-constructor)
    Surd(Rational p, Rational q, Integer n);

    /// sqrt(x) for x >= 0, written as q * sqrt(n) with n squarefree.
    static Surd sqrt(const Rational& x);

    const Rational& rational_part() const { return p_; }
    const Rational& surd_part() const { return q_; }
    const Integer& radicand() const { return n_; }
    bool is_rational() const { return q_ == 0; }

    /// -1, 0 or 1.
    int sign() const;
    Integer floor() const;
    Integer ceil() const;

    friend Surd operator+(const Surd& x, const Rational& r) { return Surd(x.p_ + r, x.q_, x.n_); }
    friend Surd operator-(const Surd& x, const Rational& r) { return Surd(x.p_ - r, x.q_, x.n_); }
    friend Surd operator*(const Rational& r, const Surd& x) { return Surd(r * x.p_, r * x.q_, x.n_); }

    friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);
    friend bool operator==(const Surd& x, const Surd& y) { return (x <=> y) == 0; }

private:
    Rational p_{0};
    Rational q_{0};
    Integer n_{1};
};

/// "p" when rational, otherwise "p+q*sqrt(n)" / "p-q*sqrt(n)" with p, q as in to_string(Rational).
std::string to_string(const Surd& s);
Surd parse_surd(std::string_view text);

/// Squarefree part and square root of the square part: n = core * root^2.
struct SquarefreeSplit {
    Integer core;
    Integer root;
};
SquarefreeSplit squarefree_split(const Integer& n);

}  // namespace stabctab
