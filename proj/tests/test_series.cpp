#include "stabctab/error.hpp"
#include "stabctab/series.hpp"

#include "random.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace stabctab;
using S = TruncatedBiSeries;

namespace {

S mono(int order, int a, int b, Rational c = Rational(1)) { return S::monomial(order, {a, b}, c); }

// 1 + c x^e as a product factor
ProductFactor<LaurentQT> binomial_factor(int order, Exponent e, Rational c, int power) {
    return {S::binomial_power(order, e, c, power), LaurentQT::weight(e)};
}

}  // namespace

TEST_CASE("add") {
    const int K = 6;
    CHECK((S::one(K) + mono(K, 1, 0)) + (S::one(K) - mono(K, 1, 0)) == S::constant(K, 2));
    const S sum = mono(K, 1, 1) + mono(K, 2, -1);
    CHECK(sum.coeff(1, 1) == 1);
    CHECK(sum.coeff(2, -1) == 1);
    CHECK(sum.terms().size() == 2);
    const S f = S::constant(K, 3) + mono(K, 2, 1, 5);
    CHECK(f + S::zero(K) == f);
    CHECK_THROWS_AS(S::one(3) + S::one(4), OrderMismatch);
}

TEST_CASE("canonical form drops zero coefficients") {
    const S f = mono(5, 1, 0) - mono(5, 1, 0);
    CHECK(f.is_zero());
    CHECK(f == S::zero(5));
    CHECK(S::monomial(5, {1, 1}, 0).is_zero());
}

TEST_CASE("mul") {
    const int K = 10;
    CHECK((S::one(K) + mono(K, 1, 0)) * (S::one(K) - mono(K, 1, 0)) == S::one(K) - mono(K, 2, 0));
    CHECK(mono(K, 1, -1) * mono(K, 1, 1) == mono(K, 2, 0));
    // (1 - qt) * sum (qt)^k by direct convolution of stored terms
    S geo(K);
    for (int k = 0; 3 * k <= 2 * K; ++k) geo = geo + mono(K, k, k);  // whole weight window
    CHECK((S::one(K) - mono(K, 1, 1)) * geo == S::one(K));
    CHECK_THROWS_AS(S::one(3) * S::one(4), OrderMismatch);
}

TEST_CASE("inverse") {
    const S f = inverse(S::one(6) - mono(6, 2, 0));
    for (int a = 0; a <= 6; ++a) CHECK(f.coeff(a, 0) == (a % 2 == 0 ? 1 : 0));
    CHECK(inverse(S::constant(4, 2)) == S::constant(4, Rational(1, 2)));
    const S g = S::one(12) - mono(12, 1, 1);
    CHECK(inverse(g) * g == S::one(12));
    CHECK_THROWS_AS(inverse(mono(4, 1, 0)), NotInvertible);
    CHECK_THROWS_AS(inverse(S::zero(4)), NotInvertible);
}

TEST_CASE("coeff contract") {
    const S f = S::one(4) - mono(4, 1, 1);
    CHECK(f.coeff(1, 1) == -1);
    CHECK(inverse(S::one(6) - mono(6, 2, 0)).coeff(0, 0) == 1);
    CHECK(f.coeff(2, -2) == 0);
    CHECK_THROWS_AS(f.coeff(3, 2), OutOfOrder);
    CHECK_THROWS_AS(f.coeff(0, -5), OutOfOrder);
    CHECK_THROWS_AS(S(-1), OutOfOrder);
}

TEST_CASE("Laurent bound is enforced on construction") {
    CHECK_THROWS_AS(mono(4, 1, -2), LaurentBoundViolated);
    CHECK_THROWS_AS(mono(4, -1, 0), LaurentBoundViolated);
    CHECK_NOTHROW(mono(4, 2, -2));
}

TEST_CASE("truncated_product") {
    const int K = 4;
    // prod (1 - q^(2m))^-1
    FactorGenerator<LaurentQT> even_parts = [&](int m) -> std::optional<ProductFactor<LaurentQT>> {
        return binomial_factor(K, {2 * m, 0}, -1, -1);
    };
    const S p = truncated_product(even_parts, K);
    CHECK(p.coeff(4, 0) == 2);
    CHECK(p.coeff(2, 0) == 1);
    CHECK(p.coeff(3, 0) == 0);

    FactorGenerator<LaurentQT> none = [](int) { return std::nullopt; };
    CHECK(truncated_product(none, 5) == S::one(5));

    FactorGenerator<LaurentQT> odd = [](int m) -> std::optional<ProductFactor<LaurentQT>> {
        return binomial_factor(1, {2 * m - 1, 0}, 1, 1);
    };
    CHECK(truncated_product(odd, 1) == S::one(1) + mono(1, 1, 0));
}

TEST_CASE("truncated_product rejects bad bounds") {
    FactorGenerator<LaurentQT> lying = [](int m) -> std::optional<ProductFactor<LaurentQT>> {
        if (m > 3) return std::nullopt;
        return ProductFactor<LaurentQT>{S::one(6) + mono(6, 1, 0), 5};
    };
    CHECK_THROWS_AS(truncated_product(lying, 6), BadFactorBound);
    FactorGenerator<LaurentQT> decreasing = [](int m) -> std::optional<ProductFactor<LaurentQT>> {
        if (m > 3) return std::nullopt;
        return ProductFactor<LaurentQT>{S::one(6), 4 - m};
    };
    CHECK_THROWS_AS(truncated_product(decreasing, 6), BadFactorBound);
    FactorGenerator<LaurentQT> scaled = [](int m) -> std::optional<ProductFactor<LaurentQT>> {
        if (m > 1) return std::nullopt;
        return ProductFactor<LaurentQT>{S::constant(6, 2), 1};
    };
    CHECK_THROWS_AS(truncated_product(scaled, 6), BadFactorBound);
}

TEST_CASE("substitution z = t, w = q/t") {
    const int K = 3;
    const auto z2w = GoettscheSeries::monomial(2 * K, {2, 1});
    CHECK(substitute_zw_to_qt(z2w, K) == mono(K, 1, 1));
    const auto w = GoettscheSeries::monomial(2 * K, {0, 1});
    CHECK(substitute_zw_to_qt(w, K) == mono(K, 1, -1));
    CHECK_THROWS_AS(substitute_zw_to_qt(w.truncate(K), K), OrderMismatch);
    // z^5 w is outside the support i <= 4n of a Goettsche-type series
    CHECK_THROWS(GoettscheSeries::monomial(4, {5, 1}));
}

TEST_CASE("binomial powers agree with repeated multiplication") {
    const int K = 7;
    const Exponent e{1, -1};
    S power = S::one(K);
    const S base = S::one(K) + S::monomial(K, e, Rational(-3, 2));
    for (int k = 1; k <= 5; ++k) {
        power = power * base;
        CHECK(S::binomial_power(K, e, Rational(-3, 2), k) == power);
    }
    CHECK(S::binomial_power(K, e, Rational(-3, 2), -4) == inverse(power * inverse(base)));
}

TEST_CASE("rendering") {
    CHECK(to_string(S::one(3) - mono(3, 1, 1) + mono(3, 0, 2, 2)) == "1 + 2*t^2 - q*t");
    CHECK(to_string(S::zero(3)) == "0");
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: ring laws on 100 random triples") {
    testsupport::Gen gen(20240101);
    for (int trial = 0; trial < 100; ++trial) {
        const int K = gen.integer(0, 8);
        const S f = gen.series_qt(K, 6, 10), g = gen.series_qt(K, 6, 10), h = gen.series_qt(K, 6, 10);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * S::one(K) == f);
        CHECK(f - f == S::zero(K));
    }
}

TEST_CASE("property: inverse round trips on 100 random invertible series") {
    testsupport::Gen gen(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int K = gen.integer(0, 8);
        const S f = gen.invertible_qt(K, 6, 10);
        const S g = inverse(f);
        CHECK(f * g == S::one(K));
        CHECK(g * f == S::one(K));
        CHECK(inverse(g) == f);
    }
}

TEST_CASE("property: truncated_product is invariant under permuting the first 5 factors") {
    testsupport::Gen gen(5);
    const int K = 8;
    std::vector<ProductFactor<LaurentQT>> base;
    const Exponent keys[] = {{1, 0}, {0, 1}, {1, 1}, {2, -1}, {1, -1}};
    for (int m = 1; m <= 5; ++m) {
        const Exponent e = keys[m - 1];
        base.push_back(binomial_factor(K, e, gen.nonzero_rational(5), gen.integer(-3, 3)));
        base.back().min_weight = 1;
    }
    auto run = [&](const std::vector<ProductFactor<LaurentQT>>& fs) {
        FactorGenerator<LaurentQT> gen_fn = [&](int m) -> std::optional<ProductFactor<LaurentQT>> {
            if (m <= 5) return fs[m - 1];
            return binomial_factor(K, {m, 0}, 1, 1);
        };
        return truncated_product(gen_fn, K);
    };
    const S reference = run(base);
    std::vector<int> idx{0, 1, 2, 3, 4};
    int checked = 0;
    do {
        std::vector<ProductFactor<LaurentQT>> fs;
        for (int i : idx) fs.push_back(base[i]);
        CHECK(run(fs) == reference);
        ++checked;
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(checked == 120);
}

TEST_CASE("property: every stored key satisfies the Laurent bound") {
    testsupport::Gen gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int K = gen.integer(1, 8);
        const S g = inverse(gen.invertible_qt(K, 5, 6));
        for (const auto& [e, c] : g.terms()) {
            CHECK(e.a >= 0);
            CHECK(e.b >= -e.a);
            CHECK(c != 0);
        }
    }
}
