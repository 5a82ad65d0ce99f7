#include "stabctab/nslattice.hpp"

#include "linalg.hpp"
#include "stabctab/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stabctab {

namespace {

RationalVector to_rational(const DivisorClass& x) {
    RationalVector out;
    out.reserve(x.size());
    for (auto v : x) out.emplace_back(v);
    return out;
}

std::string describe(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace

Rational LatticeModel::dot(const RationalVector& x, const RationalVector& y) const {
    Rational sum(0);
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < gram.size(); ++j) {
            if (gram[i][j] != 0) sum += x[i] * Rational(gram[i][j]) * y[j];
        }
    }
    return sum;
}

Integer LatticeModel::dot(const DivisorClass& x, const DivisorClass& y) const {
    Integer sum(0);
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j) sum += Integer(x[i]) * Integer(gram[i][j]) * Integer(y[j]);
    }
    return sum;
}

std::vector<RationalVector> LatticeModel::ample_test_classes() const {
    std::vector<RationalVector> out;
    for (std::size_t l = 1; l < ortho_basis.size(); ++l) {
        RationalVector a(ortho_basis[0].size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            a[k] = Rational(ample_tests[l - 1]) * ortho_basis[0][k] + ortho_basis[l][k];
        }
        out.push_back(std::move(a));
    }
    return out;
}

void LatticeModel::validate() const {
    const std::size_t rho = gram.size();
    if (rho == 0) throw InvalidLattice("rank must be at least 1");
    for (std::size_t i = 0; i < rho; ++i) {
        if (gram[i].size() != rho) throw InvalidLattice("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j) {
            if (gram[i][j] != gram[j][i]) throw InvalidLattice("Gram matrix is not symmetric");
        }
    }
    if (ample_witness.size() != rho) throw InvalidLattice("ample witness has the wrong length");
    if (dot(ample_witness, ample_witness) <= 0) throw InvalidLattice("ample witness H must satisfy H.H > 0");
    if (ortho_basis.size() != rho) throw InvalidLattice("ortho basis must have rank-many vectors");
    for (const auto& d : ortho_basis) {
        if (d.size() != rho) throw InvalidLattice("ortho basis vector has the wrong length");
    }
    if (ample_tests.size() != rho - 1) throw InvalidLattice("need one ample test n_l for each l = 2..rank");
    for (const auto& n : nef_classes) {
        if (n.size() != rho) throw InvalidLattice("nef class has the wrong length");
    }

    for (std::size_t i = 0; i < rho; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (dot(ortho_basis[i], ortho_basis[j]) != 0) {
                throw InvalidLattice("ortho basis vectors " + std::to_string(j + 1) + " and " +
                                     std::to_string(i + 1) + " are not orthogonal");
            }
        }
    }
    if (dot(ortho_basis[0], ortho_basis[0]) <= 0) throw InvalidLattice("D_1 must have positive square");
    if (dot(ortho_basis[0], to_rational(ample_witness)) <= 0) {
        throw InvalidLattice("D_1 must lie in the same component of the positive cone as H");
    }
    for (std::size_t l = 1; l < rho; ++l) {
        if (dot(ortho_basis[l], ortho_basis[l]) >= 0) {
            throw InvalidLattice("Hodge index: D_" + std::to_string(l + 1) + " = " + describe(ortho_basis[l]) +
                                 " must have negative square");
        }
    }
    for (const auto& a : ample_test_classes()) {
        if (dot(a, a) <= 0) throw InvalidLattice("ample test class " + describe(a) + " has nonpositive square");
    }

    detail::DenseMatrix p(rho, RationalVector(rho));
    for (std::size_t k = 0; k < rho; ++k) {
        for (std::size_t j = 0; j < rho; ++j) p[k][j] = ortho_basis[j][k];
    }
    const auto inv = detail::invert(p);
    if (!inv) throw BasisDenominatorError("ortho basis is not a basis of Num(S)_Q");
    if (denominator) {
        if (*denominator <= 0) throw BasisDenominatorError("declared denominator must be positive");
        for (const auto& row : *inv) {
            for (const auto& v : row) {
                if (!is_integer(v * Rational(*denominator))) {
                    throw BasisDenominatorError("ortho coordinate " + to_string(v) + " of a basis class is not in (1/" +
                                                std::to_string(*denominator) + ")Z");
                }
            }
        }
    }
}

LatticeModel bielliptic_rank2_preset() {
    LatticeModel m;
    m.name = "bielliptic-rank2";
    m.gram = {{0, 2}, {2, 0}};
    m.ample_witness = {1, 1};
    m.ortho_basis = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    m.ample_tests = {2};
    m.nef_classes = {{1, 0}, {0, 1}};  // the fibre classes A and B
    m.denominator = 2;
    return m;
}

namespace {

std::vector<RationalVector> gram_schmidt(const LatticeModel& m, const RationalVector& first) {
    const std::size_t rho = m.gram.size();
    std::vector<RationalVector> basis{first};
    for (std::size_t e = 0; e < rho && basis.size() < rho; ++e) {
        RationalVector v(rho, Rational(0));
        v[e] = 1;
        for (const auto& d : basis) {
            const Rational c = m.dot(v, d) / m.dot(d, d);
            for (std::size_t k = 0; k < rho; ++k) v[k] -= c * d[k];
        }
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; }) && m.dot(v, v) != 0) {
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

}  // namespace

LatticeModel enriques_preset() {
    LatticeModel m;
    m.name = "enriques";
    m.gram.assign(10, std::vector<std::int64_t>(10, 0));
    m.gram[0][1] = m.gram[1][0] = 1;  // hyperbolic plane U
    // E8(-1) on coordinates 2..9, Bourbaki labels 1..8
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (int i = 0; i < 8; ++i) m.gram[2 + i][2 + i] = -2;
    for (const auto& e : edges) {
        m.gram[1 + e[0]][1 + e[1]] = 1;
        m.gram[1 + e[1]][1 + e[0]] = 1;
    }
    m.ample_witness = {1, 1, 0, 0, 0, 0, 0, 0, 0, 0};
    m.ortho_basis = gram_schmidt(m, to_rational(m.ample_witness));
    // With no (-2)-curves the ample cone is the positive cone; take the least
    // n_l with (n_l D_1 + D_l)^2 > 0.
    const Rational d1sq = m.dot(m.ortho_basis[0], m.ortho_basis[0]);
    for (std::size_t l = 1; l < m.ortho_basis.size(); ++l) {
        const Rational dlsq = m.dot(m.ortho_basis[l], m.ortho_basis[l]);
        std::int64_t n = 1;
        while (Rational(n * n) * d1sq + dlsq <= 0) ++n;
        m.ample_tests.push_back(n);
    }
    return m;
}

std::optional<LatticeModel> lattice_preset(const std::string& name) {
    if (name == "bielliptic-rank2") return bielliptic_rank2_preset();
    if (name == "enriques") return enriques_preset();
    return std::nullopt;
}

namespace {

// Positive multiple of the functional theta -> c.theta with integer entries.
std::vector<std::int64_t> integral_functional(const LatticeModel& m, const RationalVector& c) {
    const std::size_t rho = m.gram.size();
    RationalVector f(rho, Rational(0));
    for (std::size_t j = 0; j < rho; ++j) {
        for (std::size_t i = 0; i < rho; ++i) f[j] += c[i] * Rational(m.gram[i][j]);
    }
    Integer lcm(1);
    for (const auto& v : f) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<std::int64_t> out;
    for (const auto& v : f) {
        const Rational scaled = v * Rational(lcm);
        if (boost::multiprecision::abs(numerator(scaled)) > Integer(1) << 40) {
            throw EnumerationTooLarge("functional coefficients too large for fixed-width enumeration");
        }
        out.push_back(numerator(scaled).convert_to<std::int64_t>());
    }
    return out;
}

__extension__ typedef __int128 Wide;

Wide apply(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& x) {
    Wide s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += static_cast<Wide>(f[i]) * x[i];
    return s;
}

/* Depth-first search over Gram coordinates. Constraint j reads
 * lo_j <= sum_k row_jk x_k <= hi_j with integer rows; a constraint is applied
 * as soon as its last variable (in search order) is reached, which for a
 * triangular change of basis prunes each level to an exact interval. */
class PointSearch {
public:
    PointSearch(std::vector<std::vector<std::int64_t>> rows, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi,
                std::vector<std::int64_t> box_lo, std::vector<std::int64_t> box_hi, std::uint64_t limit)
        : rows_(std::move(rows)), lo_(std::move(lo)), hi_(std::move(hi)), box_lo_(std::move(box_lo)),
          box_hi_(std::move(box_hi)), limit_(limit) {
        const std::size_t n = box_lo_.size();
        std::vector<bool> placed(n, false), used(rows_.size(), false);
        while (order_.size() < n) {
            std::size_t best = rows_.size();
            std::size_t best_free = n + 1;
            for (std::size_t j = 0; j < rows_.size(); ++j) {
                if (used[j]) continue;
                std::size_t free = 0;
                for (std::size_t k = 0; k < n; ++k) free += rows_[j][k] != 0 && !placed[k];
                if (free > 0 && free < best_free) best = j, best_free = free;
            }
            if (best == rows_.size()) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (!placed[k]) placed[k] = true, order_.push_back(k);
                }
                break;
            }
            used[best] = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (rows_[best][k] != 0 && !placed[k]) placed[k] = true, order_.push_back(k);
            }
        }
        closes_.assign(n, {});
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            std::size_t last = 0;
            for (std::size_t d = 0; d < n; ++d) {
                if (rows_[j][order_[d]] != 0) last = d;
            }
            closes_[last].push_back(j);
        }
    }

    template <class Visit>
    void run(Visit&& visit) {
        x_.assign(box_lo_.size(), 0);
        sums_.assign(rows_.size(), 0);
        descend(0, visit);
    }

private:
    template <class Visit>
    void descend(std::size_t depth, Visit& visit) {
        if (depth == order_.size()) {
            if (++visited_ > limit_) {
                throw EnumerationTooLarge("more than " + std::to_string(limit_) + " lattice points in the search region");
            }
            visit(x_);
            return;
        }
        const std::size_t v = order_[depth];
        Wide from = box_lo_[v], to = box_hi_[v];
        for (auto j : closes_[depth]) {
            const Wide c = rows_[j][v];
            Wide a = lo_[j] - sums_[j], b = hi_[j] - sums_[j];
            if (c < 0) std::swap(a, b), a = -a, b = -b;
            const Wide ac = c < 0 ? -c : c;
            // ceil(a / ac) and floor(b / ac)
            const Wide lo = a >= 0 ? (a + ac - 1) / ac : -((-a) / ac);
            const Wide hi = b >= 0 ? b / ac : -((-b + ac - 1) / ac);
            from = std::max(from, lo);
            to = std::min(to, hi);
        }
        for (Wide t = from; t <= to; ++t) {
            x_[v] = static_cast<std::int64_t>(t);
            for (std::size_t j = 0; j < rows_.size(); ++j) sums_[j] += static_cast<Wide>(rows_[j][v]) * t;
            descend(depth + 1, visit);
            for (std::size_t j = 0; j < rows_.size(); ++j) sums_[j] -= static_cast<Wide>(rows_[j][v]) * t;
        }
    }

    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::int64_t> lo_, hi_, box_lo_, box_hi_;
    std::uint64_t limit_;
    std::uint64_t visited_ = 0;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> closes_;
    std::vector<std::int64_t> x_;
    std::vector<Wide> sums_;
};

std::int64_t to_i64(const Integer& v) {
    if (boost::multiprecision::abs(v) > Integer(1) << 60) {
        throw EnumerationTooLarge("bound " + v.str() + " exceeds fixed-width enumeration range");
    }
    return v.convert_to<std::int64_t>();
}

}  // namespace

std::vector<Decomposition> decompose(const LatticeModel& lattice, const DivisorClass& beta, std::uint64_t limit) {
    lattice.validate();
    const std::size_t rho = lattice.gram.size();
    if (beta.size() != rho) throw InvalidLattice("beta has the wrong length");
    if (lattice.dot(beta, lattice.ample_witness) <= 0) {
        throw NotEffectiveCandidate("beta.H <= 0, so beta is not the class of a nonzero effective divisor");
    }

    detail::DenseMatrix p(rho, RationalVector(rho));
    for (std::size_t k = 0; k < rho; ++k) {
        for (std::size_t j = 0; j < rho; ++j) p[k][j] = lattice.ortho_basis[j][k];
    }
    const detail::DenseMatrix pinv = *detail::invert(p);

    // Ortho coordinates of beta.
    RationalVector a(rho, Rational(0));
    for (std::size_t j = 0; j < rho; ++j) {
        for (std::size_t k = 0; k < rho; ++k) a[j] += pinv[j][k] * Rational(beta[k]);
    }
    if (a[0] <= 0) return {};

    // Open interval for each ortho coordinate of theta_1.
    std::vector<std::pair<Rational, Rational>> ortho_box(rho);
    ortho_box[0] = {Rational(0), a[0]};
    const Rational d1sq = lattice.dot(lattice.ortho_basis[0], lattice.ortho_basis[0]);
    for (std::size_t l = 1; l < rho; ++l) {
        const Rational dlsq = lattice.dot(lattice.ortho_basis[l], lattice.ortho_basis[l]);
        const Rational k = Rational(lattice.ample_tests[l - 1]) * d1sq / -dlsq;
        ortho_box[l] = {a[l] - k * a[0], k * a[0]};
    }

    // Integer box in Gram coordinates containing the image of the ortho box.
    std::vector<std::int64_t> box_lo(rho), box_hi(rho);
    for (std::size_t k = 0; k < rho; ++k) {
        Rational mn(0), mx(0);
        for (std::size_t j = 0; j < rho; ++j) {
            const Rational u = p[k][j] * ortho_box[j].first;
            const Rational v = p[k][j] * ortho_box[j].second;
            mn += std::min(u, v);
            mx += std::max(u, v);
        }
        box_lo[k] = to_i64(floor(mn));
        box_hi[k] = to_i64(ceil(mx));
    }

    // Strict ortho constraints lo < c_j < hi as closed integer constraints on
    // the integral row L_j * pinv_j.
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> lo, hi;
    for (std::size_t j = 0; j < rho; ++j) {
        Integer l(1);
        for (const auto& v : pinv[j]) l = boost::multiprecision::lcm(l, denominator(v));
        std::vector<std::int64_t> row;
        for (const auto& v : pinv[j]) row.push_back(to_i64(numerator(v * Rational(l))));
        rows.push_back(std::move(row));
        lo.push_back(to_i64(floor(ortho_box[j].first * Rational(l)) + 1));
        hi.push_back(to_i64(ceil(ortho_box[j].second * Rational(l)) - 1));
    }

    std::vector<std::vector<std::int64_t>> strict{integral_functional(lattice, lattice.ortho_basis[0])};
    for (const auto& t : lattice.ample_test_classes()) strict.push_back(integral_functional(lattice, t));
    std::vector<std::vector<std::int64_t>> weak;
    for (const auto& n : lattice.nef_classes) weak.push_back(integral_functional(lattice, to_rational(n)));

    auto admissible = [&](const DivisorClass& theta) {
        for (const auto& f : strict) {
            if (apply(f, theta) <= 0) return false;
        }
        for (const auto& f : weak) {
            if (apply(f, theta) < 0) return false;
        }
        return true;
    };

    std::vector<Decomposition> out;
    DivisorClass rest(rho);
    PointSearch search(std::move(rows), std::move(lo), std::move(hi), std::move(box_lo), std::move(box_hi), limit);
    search.run([&](const DivisorClass& theta) {
        for (std::size_t k = 0; k < rho; ++k) rest[k] = beta[k] - theta[k];
        if (admissible(theta) && admissible(rest)) out.push_back({theta, rest});
    });
    std::sort(out.begin(), out.end(), [](const Decomposition& x, const Decomposition& y) { return x.first < y.first; });
    return out;
}

// ---------------------------------------------------------------------------

Integer enriques_dim_ls(const Integer& d_sq, std::optional<IsotropicMultiple> iso) {
    if (d_sq < 0) throw InvalidSelfIntersection("a nonzero nef divisor has D^2 >= 0");
    if (d_sq > 0) {
        if (d_sq % 2 != 0) throw InvalidSelfIntersection("the Enriques lattice is even, D^2 = " + d_sq.str());
        if (iso) throw InvalidParameters("isotropic data only applies when D^2 = 0");
        return d_sq / 2;
    }
    if (!iso) throw InvalidParameters("D^2 = 0 needs the multiple k and whether K_S is added");
    if (iso->k < 1) throw InvalidParameters("k must be positive");
    return Integer(iso->plus_canonical ? (iso->k - 1) / 2 : iso->k / 2);
}

Rational bielliptic_chi(const Rational& s, const Rational& t, const Integer& gamma) {
    return s * t * Rational(gamma);
}

Integer arithmetic_genus(const Integer& beta_sq) {
    if (beta_sq % 2 != 0) throw InvalidSelfIntersection("beta^2 must be even, got " + beta_sq.str());
    return beta_sq / 2 + 1;
}

namespace {

CodimBound minimum_of(std::vector<CaseBound> cases) {
    CodimBound out;
    out.value = cases.front().value;
    for (const auto& c : cases) out.value = std::min(out.value, c.value);
    for (const auto& c : cases) {
        if (c.value == out.value) out.governing.push_back(c.label);
    }
    out.cases = std::move(cases);
    return out;
}

void require_positive_d(int d) {
    if (d < 1) throw InvalidParameters("d must be a positive integer");
}

}  // namespace

CodimBound enriques_codim_bound(const Integer& beta_sq, int d, EnriquesCases which) {
    require_positive_d(d);
    if (beta_sq < 2) throw InvalidParameters("beta^2 must be at least 2 for an ample class");
    if (beta_sq % 2 != 0) throw InvalidSelfIntersection("the Enriques lattice is even, beta^2 = " + beta_sq.str());
    const Rational dd(d);
    const Rational b2(beta_sq);
    std::vector<CaseBound> cases{
        {"1.1", Rational(d) * Surd::sqrt(Rational(2) * b2) - Rational(2)},
        {"1.2", Surd(dd - Rational(1, 2))},
        {"1.3", Surd((dd * dd * b2 - Rational(2)) / Rational(4))},
    };
    if (which == EnriquesCases::All) {
        cases.push_back({"2.1", Surd(dd / Rational(2))});
        cases.push_back({"2.2", Surd(dd - Rational(1, 2))});
    }
    return minimum_of(std::move(cases));
}

void BiellipticParams::validate() const {
    if (a < 1 || b < 1) throw InvalidParameters("a and b must be positive integers");
    if (lambda <= 0 || mu <= 0) throw InvalidParameters("lambda and mu must be positive");
    if (gamma < 1) throw InvalidParameters("gamma must be a positive integer");
    if (!is_integer(Rational(a) * Rational(b) * lambda * mu * Rational(gamma))) {
        throw InvalidParameters("a b lambda mu gamma must be an integer (it is chi(O_S(beta)))");
    }
}

Rational BiellipticParams::beta_sq() const {
    return Rational(2) * Rational(a) * Rational(b) * lambda * mu * Rational(gamma);
}

Rational bielliptic_dim_ls(const BiellipticParams& p, int d) {
    p.validate();
    require_positive_d(d);
    const Rational dd(d);
    return dd * dd * Rational(p.a) * Rational(p.b) * p.lambda * p.mu * Rational(p.gamma) - Rational(1);
}

namespace {

/* (d a lambda - 1) mu gamma + 1 with a_1 = 0, b_1 >= 1, b_2 >= 1. The
 * underlying quantity is b_1 mu gamma (d a lambda - 1) + 1; for d a lambda < 1
 * it is smallest at b_1 = d b - 1. Returns nullopt when no b_1 is admissible. */
std::optional<Rational> one_side_zero(const Integer& a, const Rational& lambda, const Integer& b, const Rational& mu,
                                      const Integer& gamma, int d) {
    const Rational slope = Rational(d) * Rational(a) * lambda - Rational(1);
    if (slope >= 0) return slope * mu * Rational(gamma) + Rational(1);
    const Integer b1_max = Integer(d) * b - 1;
    if (b1_max < 1) return std::nullopt;
    return Rational(b1_max) * mu * Rational(gamma) * slope + Rational(1);
}

}  // namespace

CodimBound bielliptic_codim_bound(const BiellipticParams& p, int d) {
    p.validate();
    require_positive_d(d);
    const Rational dd(d);
    const Rational g(p.gamma);
    std::vector<CaseBound> cases{{"1", dd * Surd::sqrt(p.beta_sq()) - Rational(1)}};
    auto left = one_side_zero(p.a, p.lambda, p.b, p.mu, p.gamma, d);
    auto right = one_side_zero(p.b, p.mu, p.a, p.lambda, p.gamma, d);
    if (left || right) {
        Rational v = left ? *left : *right;
        if (left && right) v = std::min(*left, *right);
        cases.push_back({"2", Surd(v)});
    }
    const Rational full = dd * dd * Rational(p.a) * Rational(p.b) * p.lambda * p.mu * g -
                          dd * Rational(p.b) * p.mu * g - dd * Rational(p.a) * p.lambda * g;
    cases.push_back({"2/b2=0", Surd(full)});
    return minimum_of(std::move(cases));
}

Integer n_lower_bound(const Surd& codim_bound) {
    const Integer n = 2 * codim_bound.ceil() - 2;
    return n < -2 ? Integer(-2) : n;
}

std::vector<Integer> enriques_d0_terms(const Integer& beta_sq, int i, int j) {
    if (beta_sq < 2) throw InvalidParameters("beta_0^2 must be at least 2");
    if (beta_sq % 2 != 0) throw InvalidSelfIntersection("the Enriques lattice is even, beta^2 = " + beta_sq.str());
    if (i < 0 || j < 0) throw InvalidParameters("i and j must be nonnegative");
    const Rational b2(beta_sq);
    const Rational s(i + j);
    // (i+j+6) / (2 sqrt(2 b2)) = (i+j+6) / (4 b2) * sqrt(2 b2)
    const Surd fourth = ((s + Rational(6)) / (Rational(4) * b2)) * Surd::sqrt(Rational(2) * b2);
    const Surd fifth = Surd::sqrt((Rational(2) * s + Rational(6)) / b2);
    return {Integer(2), Integer(i + 1), ceil((s + Rational(2)) / Rational(2)), fourth.ceil(), fifth.ceil()};
}

Integer enriques_d0(const Integer& beta_sq, int i, int j) {
    const auto terms = enriques_d0_terms(beta_sq, i, j);
    return *std::max_element(terms.begin(), terms.end());
}

}  // namespace stabctab
