#include "stabctab/error.hpp"
#include "stabctab/nslattice.hpp"

#include "oracles.hpp"
#include "random.hpp"

#include <doctest.h>

using namespace stabctab;


TEST_CASE("presets validate") {
    CHECK_NOTHROW(bielliptic_rank2_preset().validate());
    const auto e = enriques_preset();
    CHECK_NOTHROW(e.validate());
    CHECK(e.rank() == 10);
    CHECK(lattice_preset("enriques").has_value());
    CHECK_FALSE(lattice_preset("k3").has_value());
    // U + E8(-1) is unimodular
    std::int64_t diag_sum = 0;
    for (int i = 0; i < 10; ++i) diag_sum += e.gram[i][i];
    CHECK(diag_sum == -16);
}

TEST_CASE("lattice validation") {
    auto m = bielliptic_rank2_preset();
    m.ortho_basis[1] = {Rational(1), Rational(1)};  // two vectors of positive square
    CHECK_THROWS_AS(m.validate(), InvalidLattice);
    m = bielliptic_rank2_preset();
    m.gram[0][1] = 3;
    CHECK_THROWS_AS(m.validate(), InvalidLattice);
    m = bielliptic_rank2_preset();
    m.ample_witness = {1, 0};
    CHECK_THROWS_AS(m.validate(), InvalidLattice);
    m = bielliptic_rank2_preset();
    m.ample_tests = {0};  // A = D2 has negative square
    CHECK_THROWS_AS(m.validate(), InvalidLattice);
    m = bielliptic_rank2_preset();
    m.denominator = 1;  // ortho coordinates of (1,0) are (1/2, 1/2)
    CHECK_THROWS_AS(m.validate(), BasisDenominatorError);
    m = bielliptic_rank2_preset();
    m.ortho_basis[0] = {Rational(0), Rational(0)};
    CHECK_THROWS_AS(m.validate(), InvalidLattice);
}

TEST_CASE("decompose on the bielliptic preset") {
    const auto m = bielliptic_rank2_preset();
    const auto p11 = decompose(m, {1, 1});
    REQUIRE(p11.size() == 2);
    CHECK(p11[0] == Decomposition{{0, 1}, {1, 0}});
    CHECK(p11[1] == Decomposition{{1, 0}, {0, 1}});
    const auto p22 = decompose(m, {2, 2});
    CHECK(p22.size() == 7);
    for (const auto& d : p22) {
        CHECK(d.first[0] + d.second[0] == 2);
        CHECK(d.first[1] + d.second[1] == 2);
        CHECK(d.first != DivisorClass{0, 0});
        CHECK(d.second != DivisorClass{0, 0});
    }
    CHECK(std::is_sorted(p22.begin(), p22.end(),
                         [](const Decomposition& x, const Decomposition& y) { return x.first < y.first; }));
    CHECK(decompose(m, {1, 0}).empty());
    CHECK_THROWS_AS(decompose(m, {-1, 0}), NotEffectiveCandidate);
    CHECK_THROWS_AS(decompose(m, {0, 0}), NotEffectiveCandidate);
    CHECK_THROWS_AS(decompose(m, {1, 2, 3}), InvalidLattice);
}

TEST_CASE("decompose on the Enriques lattice") {
    const auto m = enriques_preset();
    const DivisorClass beta{1, 1, 0, 0, 0, 0, 0, 0, 0, 0};
    const auto pairs = decompose(m, beta);
    CHECK(!pairs.empty());
    const auto tests = m.ample_test_classes();
    for (const auto& d : pairs) {
        for (std::size_t k = 0; k < 10; ++k) CHECK(d.first[k] + d.second[k] == beta[k]);
        const RationalVector t1(d.first.begin(), d.first.end()), t2(d.second.begin(), d.second.end());
        CHECK(m.dot(m.ortho_basis[0], t1) > 0);
        CHECK(m.dot(m.ortho_basis[0], t2) > 0);
        for (const auto& a : tests) {
            CHECK(m.dot(a, t1) > 0);
            CHECK(m.dot(a, t2) > 0);
        }
    }
    CHECK_THROWS_AS(decompose(m, {3, 3, 0, 0, 0, 0, 0, 0, 0, 0}, 1000), EnumerationTooLarge);
}

TEST_CASE("property: enumerator matches brute force on random rank-2 lattices") {
    testsupport::Gen gen(4242);
    int lattices = 0;
    while (lattices < 40) {
        const auto m = testsupport::random_rank2(gen);
        if (!m) continue;
        ++lattices;
        for (int trial = 0; trial < 3; ++trial) {
            const DivisorClass beta{gen.integer(-5, 5), gen.integer(-5, 5)};
            if (m->dot(beta, m->ample_witness) <= 0) continue;
            const auto fast = decompose(*m, beta);
            const auto slow = testsupport::brute_force_decompose(*m, beta, testsupport::rank2_search_radius(*m, beta));
            CAPTURE(m->gram[0][0]);
            CAPTURE(m->gram[0][1]);
            CAPTURE(m->gram[1][1]);
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("linear systems") {
    CHECK(enriques_dim_ls(10) == 5);
    CHECK(enriques_dim_ls(0, IsotropicMultiple{3, false}) == 1);
    CHECK(enriques_dim_ls(0, IsotropicMultiple{3, true}) == 1);
    CHECK(enriques_dim_ls(0, IsotropicMultiple{4, true}) == 1);
    CHECK(enriques_dim_ls(0, IsotropicMultiple{4, false}) == 2);
    CHECK_THROWS_AS(enriques_dim_ls(7), InvalidSelfIntersection);
    CHECK_THROWS_AS(enriques_dim_ls(-2), InvalidSelfIntersection);
    CHECK_THROWS_AS(enriques_dim_ls(0), InvalidParameters);

    CHECK(bielliptic_chi(1, 1, 2) == 2);
    CHECK(bielliptic_chi(0, 5, 3) == 0);
    CHECK(bielliptic_chi(3, 2, 3) == 18);

    CHECK(arithmetic_genus(10) == 6);
    CHECK(arithmetic_genus(0) == 1);
    CHECK_THROWS_AS(arithmetic_genus(3), InvalidSelfIntersection);
    // dim|beta| + p_a = beta^2 + chi(O_S) on an Enriques surface
    for (int b2 = 2; b2 <= 40; b2 += 2) CHECK(enriques_dim_ls(b2) + arithmetic_genus(b2) == b2 + 1);
}

TEST_CASE("enriques_codim_bound") {
    const auto c = enriques_codim_bound(10, 10);
    CHECK(c.value == Surd(5));
    CHECK(c.governing == std::vector<std::string>{"2.1"});
    REQUIRE(c.cases.size() == 5);
    CHECK(c.cases[0].value == Rational(10) * Surd::sqrt(20) - Rational(2));
    CHECK(c.cases[1].value == Surd(Rational(19, 2)));
    CHECK(c.cases[2].value == Surd(Rational(998, 4)));
    // beta^2 = 2, d = 1: cases 1.1 and 1.3 are both 0
    const auto small = enriques_codim_bound(2, 1);
    CHECK(small.cases[0].value == Surd(0));
    CHECK(small.value == Surd(0));
    CHECK(small.governing == std::vector<std::string>{"1.1", "1.3"});
    CHECK(enriques_codim_bound(2, 1, EnriquesCases::NefComponents).cases.size() == 3);
    CHECK_THROWS_AS(enriques_codim_bound(3, 1), InvalidSelfIntersection);
    CHECK_THROWS_AS(enriques_codim_bound(0, 1), InvalidParameters);
    CHECK_THROWS_AS(enriques_codim_bound(10, 0), InvalidParameters);
    for (int d = 1; d <= 50; ++d) CHECK(enriques_codim_bound(10, d + 1).value >= enriques_codim_bound(10, d).value);
}

TEST_CASE("bielliptic bounds") {
    const BiellipticParams p{1, 1, 1, 1, 2};
    CHECK_THROWS_AS(BiellipticParams{}.validate(), InvalidParameters);
    const auto c = bielliptic_codim_bound(p, 3);
    CHECK(c.value == Surd(5));
    CHECK(c.governing == std::vector<std::string>{"1", "2"});
    CHECK(n_lower_bound(c.value) == 8);
    CHECK(bielliptic_codim_bound(p, 1).value == Surd(-2));
    CHECK(bielliptic_dim_ls(p, 3) == 17);

    BiellipticParams bad = p;
    bad.lambda = Rational(1, 3);
    CHECK_THROWS_AS(bad.validate(), InvalidParameters);  // a b lambda mu gamma = 2/3
    bad = p;
    bad.mu = 0;
    CHECK_THROWS_AS(bielliptic_codim_bound(bad, 2), InvalidParameters);

    // d a lambda < 1: case 2 uses the smallest admissible b_1 = d b - 1
    BiellipticParams q;
    q.a = 1, q.b = 3, q.lambda = Rational(1, 2), q.mu = Rational(2), q.gamma = 2;
    const auto cq = bielliptic_codim_bound(q, 1);
    // slope (1/2 - 1) = -1/2, b_1 = 2: 2 * 2 * 2 * (-1/2) + 1 = -3; mirror: (3*2 - 1) * 1/2 * 2 + 1 = 6
    CHECK(cq.cases[1].value == Surd(-3));
}

TEST_CASE("n_lower_bound") {
    CHECK(n_lower_bound(Surd(5)) == 8);
    CHECK(n_lower_bound(Surd(Rational(1, 2))) == 0);
    CHECK(n_lower_bound(Surd(0)) == -2);
    CHECK(n_lower_bound(Surd(-7)) == -2);
    CHECK(n_lower_bound(Surd::sqrt(20)) == 8);  // ceil(4.47) = 5
}

TEST_CASE("enriques_d0") {
    CHECK(enriques_d0(10, 2, 3) == 4);
    CHECK(enriques_d0(10, 0, 0) == 2);
    const auto terms = enriques_d0_terms(10, 2, 3);
    REQUIRE(terms.size() == 5);
    CHECK(terms[2] == 4);
    CHECK(enriques_d0(2, 0, 10) == 6);  // terms 2, 1, 6, 4, 4
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            CHECK(enriques_d0(10, i + 1, j) >= enriques_d0(10, i, j));
            CHECK(enriques_d0(10, i, j + 1) >= enriques_d0(10, i, j));
        }
    }
}

TEST_CASE("property: d0 guarantees the stable-range hypotheses for nef components") {
    for (int b2 = 2; b2 <= 20; b2 += 2) {
        for (int i = 0; i <= 6; ++i) {
            for (int j = 0; j <= 6; ++j) {
                const Integer d0 = enriques_d0(b2, i, j);
                for (int d = d0.convert_to<int>(); d <= d0.convert_to<int>() + 5; ++d) {
                    const auto c = enriques_codim_bound(b2, d, EnriquesCases::NefComponents);
                    CHECK(n_lower_bound(c.value) >= i + j);
                    CHECK(Integer(d) * d * b2 >= 3 * i + j);
                }
            }
        }
    }
}

TEST_CASE("property: codimension bounds are nondecreasing in d") {
    testsupport::Gen gen(77);
    for (int trial = 0; trial < 10; ++trial) {
        const int b2 = 2 * gen.integer(1, 20);
        for (int d = 2; d < 100; ++d) CHECK(enriques_codim_bound(b2, d + 1).value >= enriques_codim_bound(b2, d).value);
        BiellipticParams p;
        p.a = gen.integer(1, 4), p.b = gen.integer(1, 4), p.gamma = gen.integer(1, 4);
        p.lambda = Rational(gen.integer(1, 3)), p.mu = Rational(gen.integer(1, 3));
        for (int d = 2; d < 100; ++d) CHECK(bielliptic_codim_bound(p, d + 1).value >= bielliptic_codim_bound(p, d).value);
    }
}
