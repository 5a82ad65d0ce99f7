#pragma once

#include "stabctab/arith.hpp"
#include "stabctab/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stabctab {

/// Exponent pair of a bivariate monomial. Its meaning (which variable is
/// which) is fixed by the grading the series is parametrized on.
struct Exponent {
    int a = 0;
    int b = 0;

    friend constexpr Exponent operator+(Exponent x, Exponent y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr Exponent operator-(Exponent x, Exponent y) { return {x.a - y.a, x.b - y.b}; }
    friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

std::string to_string(Exponent e);

/* Grading for series in (q, t) where t may carry negative exponents.
 *
 * Keys are (a, b) for q^a t^b with a >= 0 and b >= -a. The user-facing
 * truncation order K promises every coefficient with a + |b| <= K. That
 * "total degree" is not additive (q t^-1 times t is q, of smaller degree than
 * either factor), so arithmetic runs on the additive weight 2a + b, which is
 * strictly positive on every nonconstant admissible monomial and has finitely
 * many monomials per value. A series of order K stores everything of weight
 * <= 2K; since a + |b| <= K implies 2a + b <= 2K, all visible coefficients are
 * exact. */
struct LaurentQT {
    static constexpr const char* first = "q";
    static constexpr const char* second = "t";

    static constexpr bool admissible(Exponent e) { return e.a >= 0 && e.b >= -e.a; }
    static constexpr int weight(Exponent e) { return 2 * e.a + e.b; }
    static constexpr int window(int order) { return 2 * order; }
    static constexpr bool visible(Exponent e, int order) { return e.a + std::abs(e.b) <= order; }

    static std::vector<Exponent> keys_up_to(int window);
    [[noreturn]] static void reject(Exponent e);
};

/* Grading for Goettsche-type series in (z, w): key (a, b) is z^a w^b, with
 * 0 <= a <= 4b (the Betti numbers of S^[b] vanish above degree 4b).
 * Truncation is by w-degree, so an order-K series holds b <= K exactly. */
struct GoettscheZW {
    static constexpr const char* first = "z";
    static constexpr const char* second = "w";

    static constexpr bool admissible(Exponent e) { return e.b >= 0 && e.a >= 0 && e.a <= 4 * e.b; }
    static constexpr int weight(Exponent e) { return e.b; }
    static constexpr int window(int order) { return order; }
    static constexpr bool visible(Exponent e, int order) { return e.b <= order; }

    static std::vector<Exponent> keys_up_to(int window);
    [[noreturn]] static void reject(Exponent e);
};

/// Orders keys by grading weight first, so iteration visits lower-weight
/// coefficients before anything that could depend on them.
template <class Grading>
struct WeightOrder {
    bool operator()(const Exponent& x, const Exponent& y) const {
        const int wx = Grading::weight(x);
        const int wy = Grading::weight(y);
        if (wx != wy) return wx < wy;
        return x < y;
    }
};

/// Exact truncated bivariate series. Immutable in spirit: every operation
/// returns a new value, and no stored coefficient is zero.
template <class Grading>
class BiSeries {
public:
    using Terms = std::map<Exponent, Rational, WeightOrder<Grading>>;

    explicit BiSeries(int order) : order_(order) {
        if (order < 0) throw OutOfOrder("negative truncation order " + std::to_string(order));
    }

    static BiSeries zero(int order) { return BiSeries(order); }
    static BiSeries constant(int order, const Rational& c) { return monomial(order, {0, 0}, c); }
    static BiSeries one(int order) { return constant(order, Rational(1)); }

    static BiSeries monomial(int order, Exponent e, const Rational& c = Rational(1)) {
        BiSeries s(order);
        s.accumulate(e, c);
        return s;
    }

    /// Builds a series from explicit terms; terms beyond the stored window are
    /// dropped, inadmissible keys are rejected.
    static BiSeries from_terms(int order, std::initializer_list<std::pair<Exponent, Rational>> terms) {
        BiSeries s(order);
        for (const auto& [e, c] : terms) s.accumulate(e, c);
        return s;
    }

    template <class Range>
    static BiSeries from_range(int order, const Range& terms) {
        BiSeries s(order);
        for (const auto& [e, c] : terms) s.accumulate(e, c);
        return s;
    }

    int order() const { return order_; }
    int window() const { return Grading::window(order_); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational constant_term() const { return stored({0, 0}); }

    /// Coefficient of the monomial with exponent (a, b).
    Rational coeff(int a, int b) const {
        const Exponent e{a, b};
        if (!Grading::visible(e, order_)) {
            throw OutOfOrder("coefficient " + to_string(e) + " lies beyond truncation order " +
                             std::to_string(order_));
        }
        return stored(e);
    }

    /// Like coeff(), but accepts anything inside the stored window.
    Rational stored(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend BiSeries operator+(const BiSeries& f, const BiSeries& g) {
        check_orders(f, g, "add");
        BiSeries out = f;
        for (const auto& [e, c] : g.terms_) out.accumulate(e, c);
        return out;
    }

    friend BiSeries operator-(const BiSeries& f) {
        BiSeries out = f;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend BiSeries operator-(const BiSeries& f, const BiSeries& g) { return f + (-g); }

    friend BiSeries operator*(const Rational& k, const BiSeries& f) {
        BiSeries out(f.order_);
        if (k == 0) return out;
        for (const auto& [e, c] : f.terms_) out.terms_.emplace(e, k * c);
        return out;
    }

    /// Cauchy product truncated to the common window.
    friend BiSeries operator*(const BiSeries& f, const BiSeries& g) {
        check_orders(f, g, "mul");
        BiSeries out(f.order_);
        const int w = f.window();
        for (const auto& [ef, cf] : f.terms_) {
            const int wf = Grading::weight(ef);
            for (const auto& [eg, cg] : g.terms_) {
                if (wf + Grading::weight(eg) > w) break;  // g is weight-sorted
                out.accumulate(ef + eg, cf * cg);
            }
        }
        return out;
    }

    friend bool operator==(const BiSeries& f, const BiSeries& g) {
        return f.order_ == g.order_ && f.terms_ == g.terms_;
    }

    /// Same series viewed at a smaller (or equal) order.
    BiSeries truncate(int order) const {
        if (order > order_) {
            throw OrderMismatch("cannot raise order " + std::to_string(order_) + " to " + std::to_string(order));
        }
        BiSeries out(order);
        for (const auto& [e, c] : terms_) {
            if (Grading::weight(e) <= out.window()) out.terms_.emplace(e, c);
        }
        return out;
    }

    /// Multiplies by (1 + c x^e)^power, power of either sign, in O(power * size).
    BiSeries times_binomial_power(Exponent e, const Rational& c, int power) const {
        if (!Grading::admissible(e) || Grading::weight(e) <= 0) {
            throw BadFactorBound("binomial factor monomial " + to_string(e) + " must have positive weight");
        }
        BiSeries out = *this;
        if (Grading::weight(e) > window() || c == 0) return out;
        for (int k = 0; k < std::abs(power); ++k) {
            out = power > 0 ? out.times_one_plus(e, c) : out.over_one_plus(e, c);
        }
        return out;
    }

    /// Convenience: the series (1 + c x^e)^power itself.
    static BiSeries binomial_power(int order, Exponent e, const Rational& c, int power) {
        return one(order).times_binomial_power(e, c, power);
    }

    /// Adds c to the coefficient of x^e (used by builders and tests).
    void accumulate(Exponent e, const Rational& c) {
        if (!Grading::admissible(e)) Grading::reject(e);
        if (c == 0 || Grading::weight(e) > window()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    static void check_orders(const BiSeries& f, const BiSeries& g, const char* op) {
        if (f.order_ != g.order_) {
            throw OrderMismatch(std::string(op) + ": orders " + std::to_string(f.order_) + " and " +
                                std::to_string(g.order_) + " differ");
        }
    }

    BiSeries times_one_plus(Exponent e, const Rational& c) const {
        BiSeries out = *this;
        for (const auto& [k, v] : terms_) out.accumulate(k + e, c * v);
        return out;
    }

    /* g = f / (1 + c x^e) solves g = f - c x^e g; visiting keys by increasing
     * weight guarantees g[k - e] is final before g[k] is formed. */
    BiSeries over_one_plus(Exponent e, const Rational& c) const {
        BiSeries out(order_);
        for (const Exponent& k : Grading::keys_up_to(window())) {
            Rational v = stored(k);
            const Exponent prev = k - e;
            if (Grading::admissible(prev)) {
                auto it = out.terms_.find(prev);
                if (it != out.terms_.end()) v -= c * it->second;
            }
            if (v != 0) out.terms_.emplace(k, std::move(v));
        }
        return out;
    }

    int order_;
    Terms terms_;
};

using TruncatedBiSeries = BiSeries<LaurentQT>;
using GoettscheSeries = BiSeries<GoettscheZW>;

/// Two-sided inverse; the constant term must be nonzero.
template <class Grading>
BiSeries<Grading> inverse(const BiSeries<Grading>& f) {
    const Rational c0 = f.constant_term();
    if (c0 == 0) throw NotInvertible("constant term is zero");
    /* With f = c0 + r, the inverse g satisfies g[k] = -(1/c0) sum_{e != 0} r[e] g[k - e]
     * for k != 0; weights of k - e are strictly smaller than that of k. */
    const Rational inv0 = Rational(1) / c0;
    std::map<Exponent, Rational, WeightOrder<Grading>> g;
    for (const Exponent& k : Grading::keys_up_to(f.window())) {
        if (k == Exponent{0, 0}) {
            g.emplace(k, inv0);
            continue;
        }
        Rational acc(0);
        for (const auto& [e, c] : f.terms()) {
            if (e == Exponent{0, 0}) continue;
            if (Grading::weight(e) > Grading::weight(k)) break;
            auto it = g.find(k - e);
            if (it != g.end()) acc += c * it->second;
        }
        if (acc != 0) g.emplace(k, -inv0 * acc);
    }
    return BiSeries<Grading>::from_range(f.order(), g);
}

/// One factor of an infinite product, together with a lower bound on the
/// grading weight of its nonconstant part.
template <class Grading>
struct ProductFactor {
    BiSeries<Grading> series;
    int min_weight;
};

template <class Grading>
using FactorGenerator = std::function<std::optional<ProductFactor<Grading>>(int m)>;

/* Product of factors m = 1, 2, ... as produced by the generator. Each factor
 * must be 1 + (terms of weight >= min_weight); min_weight must be positive and
 * nondecreasing. Generation stops at the first nullopt or at the first factor
 * whose bound exceeds the window, since it and all later factors are 1 modulo
 * truncation. */
template <class Grading>
BiSeries<Grading> truncated_product(const FactorGenerator<Grading>& factors, int order) {
    BiSeries<Grading> acc = BiSeries<Grading>::one(order);
    const int window = Grading::window(order);
    int last_bound = 1;
    for (int m = 1;; ++m) {
        std::optional<ProductFactor<Grading>> factor = factors(m);
        if (!factor) break;
        if (factor->min_weight < last_bound) {
            throw BadFactorBound("factor " + std::to_string(m) + " declares bound " +
                                 std::to_string(factor->min_weight) + " below the previous bound " +
                                 std::to_string(last_bound));
        }
        last_bound = factor->min_weight;
        if (factor->min_weight > window) break;
        if (factor->series.order() != order) {
            throw OrderMismatch("factor " + std::to_string(m) + " has order " +
                                std::to_string(factor->series.order()));
        }
        for (const auto& [e, c] : factor->series.terms()) {
            const bool is_one = e == Exponent{0, 0};
            if ((is_one && c != 1) || (!is_one && Grading::weight(e) < factor->min_weight)) {
                throw BadFactorBound("factor " + std::to_string(m) + " violates its declared bound at " +
                                     to_string(e));
            }
        }
        if (factor->series.constant_term() != 1) {
            throw BadFactorBound("factor " + std::to_string(m) + " has constant term != 1");
        }
        acc = acc * factor->series;
    }
    return acc;
}

/* The change of variables z = t, w = q/t: z^i w^n goes to q^n t^(i - n).
 * The image of z^i w^n has weight n + i, so an exact image up to order K
 * needs the source to be exact for all w-degrees <= 2K. */
TruncatedBiSeries substitute_zw_to_qt(const GoettscheSeries& g, int order);

/// Human-readable rendering, lowest weight first, e.g. "1 + 9*q*t - q^2".
template <class Grading>
std::string to_string(const BiSeries<Grading>& f);

}  // namespace stabctab
