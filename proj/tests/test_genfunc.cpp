#include "stabctab/error.hpp"
#include "stabctab/genfunc.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace stabctab;

namespace {
const SurfaceTopology kEnriques = SurfaceTopology::enriques();
const SurfaceTopology kBielliptic = SurfaceTopology::bielliptic();
const SurfaceTopology kTested[] = {kEnriques, kBielliptic, {0, 1, 0}, {4, 6, 0}, {2, 5, 0}};
}  // namespace

TEST_CASE("surface validation") {
    CHECK_THROWS_AS((SurfaceTopology{1, 10, 0}.validate()), InvalidSurface);
    CHECK_THROWS_AS((SurfaceTopology{0, 0, 0}.validate()), InvalidSurface);
    CHECK_THROWS_AS((SurfaceTopology{-2, 3, 0}.validate()), InvalidSurface);
    CHECK_NOTHROW(kEnriques.validate());
    CHECK_THROWS_AS(stable_betti(SurfaceTopology{3, 1, 0}, 2), InvalidSurface);
}

TEST_CASE("goettsche_series") {
    const auto g = goettsche_series(kEnriques, 4);
    CHECK(g.coeff(2, 1) == 10);
    CHECK(g.coeff(2, 2) == 11);
    for (int n = 0; n <= 4; ++n) CHECK(g.coeff(0, n) == 1);
    const auto h = goettsche_series(kBielliptic, 3);
    for (int n = 0; n <= 3; ++n) CHECK(h.coeff(0, n) == 1);
}

TEST_CASE("hilb_betti") {
    CHECK(hilb_betti(kEnriques, 2, 2) == 11);
    CHECK(hilb_betti(kBielliptic, 1, 1) == 2);
    for (int n = 0; n <= 5; ++n) CHECK(hilb_betti(kBielliptic, n, 0) == 1);
    CHECK(hilb_betti(kEnriques, 2, 9) == 0);
    CHECK(hilb_betti(kEnriques, 0, 0) == 1);
    // S itself: b_0..b_4 = 1, b1, b2, b1, 1
    CHECK(hilb_betti(kBielliptic, 1, 2) == 2);
    CHECK(hilb_betti(kBielliptic, 1, 3) == 2);
    CHECK(hilb_betti(kBielliptic, 1, 4) == 1);
}

TEST_CASE("hilb_betti agrees with the dense oracle") {
    for (const auto& s : kTested) {
        const auto table = hilb_betti_table(s, 6);
        const auto oracle = testsupport::dense_goettsche(s.b1, s.b2, 6);
        CHECK(table == oracle);
    }
}

TEST_CASE("stable_betti") {
    CHECK(stable_betti(kEnriques, 2) == 11);
    CHECK(stable_betti(kEnriques, 0) == 1);
    CHECK(stable_betti(kBielliptic, 0) == 1);
    CHECK(stable_betti(kBielliptic, 1) == 2);
    const std::vector<Integer> enr{1, 0, 11, 0, 78, 0, 430};
    CHECK(stable_betti_series(kEnriques, 6) == enr);
    const std::vector<Integer> bi{1, 2, 4, 10, 21, 40, 74};
    CHECK(stable_betti_series(kBielliptic, 6) == bi);
    for (const auto& s : kTested) CHECK(stable_betti_series(s, 14) == testsupport::dense_stable_betti(s.b1, s.b2, 14));
}

TEST_CASE("stable_perverse_series and table") {
    const auto h = stable_perverse_series(kEnriques, 4);
    CHECK(h.coeff(1, 1) == 9);
    CHECK(h.coeff(2, 0) == 1);
    CHECK(h.coeff(0, 2) == 1);
    CHECK(h.coeff(0, 0) == 1);
    CHECK(stable_perverse_series(kBielliptic, 2).coeff(0, 0) == 1);

    const auto t = stable_perverse_table(kEnriques, 2);
    PerverseTable expected(2);
    expected.set(0, 0, 1);
    expected.set(1, 1, 9);
    expected.set(2, 0, 1);
    expected.set(0, 2, 1);
    CHECK(t == expected);
    CHECK(t.at(1, 0) == 0);
    CHECK_THROWS_AS(t.at(2, 1), OutOfOrder);
    const auto t12 = stable_perverse_table(kEnriques, 12);
    for (int j = 1; j <= 12; j += 2) CHECK(t12.at(0, j) == 0);
    for (const auto& s : kTested) CHECK(stable_perverse_table(s, 0).at(0, 0) == 1);
}

TEST_CASE("stable_perverse_table agrees with the dense oracle") {
    for (const auto& s : kTested) {
        const int K = 10;
        const auto t = stable_perverse_table(s, K);
        const auto oracle = testsupport::dense_perverse(s.b1, s.b2, K);
        for (int i = 0; i <= K; ++i) {
            for (int j = 0; i + j <= K; ++j) CHECK(t.at(i, j) == oracle[i][j]);
        }
    }
}

TEST_CASE("stable_betti_from_perverse") {
    CHECK(stable_betti_from_perverse(kEnriques, 2) == 11);
    CHECK(stable_betti_from_perverse(kEnriques, 0) == 1);
    CHECK(stable_betti_from_perverse(kBielliptic, 1) == 2);
}

TEST_CASE("perverse series against the substituted Goettsche series") {
    CHECK(check_remark_identity(kEnriques, 8));
    CHECK(check_remark_identity({0, 1, 0}, 6));
    CHECK(check_remark_identity(kEnriques, 0));
    const auto r = remark_identity_report(kEnriques, 6, true);
    CHECK_FALSE(r.holds);
    REQUIRE(r.first_mismatch);
    CHECK(r.lhs != r.rhs);
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: stabilization b_k(S^[n]) = b_k for k <= n") {
    for (const auto& s : kTested) {
        const auto table = hilb_betti_table(s, 10);
        const auto stable = stable_betti_series(s, 8);
        for (int k = 0; k <= 8; ++k) {
            for (int n = k; n <= 10; ++n) CHECK(table[n][k] == stable[k]);
        }
    }
}

TEST_CASE("property: H(q,q) gives the stable Betti numbers") {
    for (const auto& s : kTested) {
        const auto stable = stable_betti_series(s, 10);
        for (int k = 0; k <= 10; ++k) CHECK(stable_betti_from_perverse(s, k) == stable[k]);
    }
}

TEST_CASE("property: odd stable Betti numbers vanish when b1 = 0") {
    for (const auto& s : kTested) {
        if (s.b1 != 0) continue;
        const auto stable = stable_betti_series(s, 12);
        for (int k = 1; k <= 12; k += 2) CHECK(stable[k] == 0);
    }
}

TEST_CASE("property: Poincare duality smoke check for n <= 3") {
    for (const auto& s : kTested) {
        const auto table = hilb_betti_table(s, 3);
        for (int n = 0; n <= 3; ++n) {
            for (int k = 0; k <= 4 * n; ++k) CHECK(table[n][k] == table[n][4 * n - k]);
        }
    }
}

TEST_CASE("property: table entries are nonnegative integers with base row in {0,1}") {
    for (const auto& s : kTested) {
        const auto t = stable_perverse_table(s, 12);
        for (const auto& [key, v] : t.entries()) {
            CHECK(v >= 0);
            if (key.first == 0) CHECK((v == 0 || v == 1));
        }
    }
}
