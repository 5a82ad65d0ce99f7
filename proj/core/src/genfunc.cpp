#include "stabctab/genfunc.hpp"

#include "stabctab/error.hpp"

#include <string>

namespace stabctab {

void SurfaceTopology::validate() const {
    if (b1 < 0 || b1 % 2 != 0) {
        throw InvalidSurface("b1 must be a nonnegative even integer, got " + std::to_string(b1));
    }
    if (b2 <= 0) {
        throw InvalidSurface("b2 must be positive, got " + std::to_string(b2));
    }
}

Integer PerverseTable::at(int i, int j) const {
    if (i < 0 || j < 0) return Integer(0);
    if (i + j > order_) {
        throw OutOfOrder("entry (" + std::to_string(i) + "," + std::to_string(j) + ") beyond order " +
                         std::to_string(order_));
    }
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Integer(0) : it->second;
}

void PerverseTable::set(int i, int j, Integer value) {
    if (i < 0 || j < 0 || i + j > order_) {
        throw OutOfOrder("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside table of order " +
                         std::to_string(order_));
    }
    if (value == 0) {
        entries_.erase({i, j});
    } else {
        entries_[{i, j}] = std::move(value);
    }
}

std::optional<TableDifference> first_difference(const PerverseTable& left, const PerverseTable& right) {
    const int order = std::min(left.order(), right.order());
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            Integer l = left.at(i, j);
            Integer r = right.at(i, j);
            if (l != r) return TableDifference{i, j, std::move(l), std::move(r)};
        }
    }
    if (left.order() != right.order()) {
        return TableDifference{order + 1, 0, Integer(left.order()), Integer(right.order())};
    }
    return std::nullopt;
}

namespace {

// (1 + sign * x^e)^power
struct Piece {
    Exponent e;
    int sign;
    int power;
};

/* Multiplies together the binomial pieces of one factor index m; the declared
 * bound is the smallest weight among the pieces that actually occur. */
template <class Grading>
ProductFactor<Grading> make_factor(int order, std::initializer_list<Piece> pieces) {
    auto series = BiSeries<Grading>::one(order);
    int bound = -1;
    for (const auto& p : pieces) {
        const int w = Grading::weight(p.e);
        if (p.power != 0) bound = bound < 0 ? w : std::min(bound, w);
        series = series.times_binomial_power(p.e, Rational(p.sign), p.power);
    }
    return {std::move(series), bound < 0 ? Grading::window(order) + 1 : bound};
}

}  // namespace

GoettscheSeries goettsche_series(const SurfaceTopology& s, int order) {
    s.validate();
    using G = GoettscheZW;
    // Key (a, b) is z^a w^b. The pieces of index m all have w-degree m.
    FactorGenerator<G> gen = [&](int m) -> std::optional<ProductFactor<G>> {
        if (m > order) return ProductFactor<G>{GoettscheSeries::one(order), m};
        auto f = make_factor<G>(order, {
                                           {{2 * m - 1, m}, +1, s.b1},
                                           {{2 * m + 1, m}, +1, s.b1},
                                           {{2 * m - 2, m}, -1, -1},
                                           {{2 * m, m}, -1, -s.b2},
                                           {{2 * m + 2, m}, -1, -1},
                                       });
        f.min_weight = m;
        return f;
    };
    return truncated_product(gen, order);
}

std::vector<std::vector<Integer>> hilb_betti_table(const SurfaceTopology& s, int max_n) {
    const GoettscheSeries g = goettsche_series(s, max_n);
    std::vector<std::vector<Integer>> table(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = table[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(4 * n) + 1);
        for (int k = 0; k <= 4 * n; ++k) {
            const Rational c = g.coeff(k, n);
            if (!is_integer(c) || c < 0) {
                throw InternalIdentityFailure("b_" + std::to_string(k) + "(S^[" + std::to_string(n) +
                                              "]) = " + to_string(c));
            }
            row[static_cast<std::size_t>(k)] = numerator(c);
        }
    }
    return table;
}

Integer hilb_betti(const SurfaceTopology& s, int n, int k) {
    if (n < 0 || k < 0) throw OutOfOrder("hilb_betti needs n >= 0 and k >= 0");
    if (k > 4 * n) {
        s.validate();
        return Integer(0);
    }
    return hilb_betti_table(s, n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<Integer> stable_betti_series(const SurfaceTopology& s, int max_k) {
    s.validate();
    if (max_k < 0) throw OutOfOrder("max_k must be nonnegative");
    using G = LaurentQT;
    // One-variable series in q, stored as q^a t^0.
    FactorGenerator<G> gen = [&](int m) -> std::optional<ProductFactor<G>> {
        return make_factor<G>(max_k, {
                                         {{2 * m - 1, 0}, +1, s.b1},
                                         {{2 * m + 1, 0}, +1, s.b1},
                                         {{2 * m, 0}, -1, -(s.b2 + 1)},
                                         {{2 * m + 2, 0}, -1, -1},
                                     });
    };
    const TruncatedBiSeries p = truncated_product(gen, max_k);
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        const Rational c = p.coeff(k, 0);
        if (!is_integer(c) || c < 0) {
            throw InternalIdentityFailure("b_" + std::to_string(k) + "^inf = " + to_string(c));
        }
        out.push_back(numerator(c));
    }
    return out;
}

Integer stable_betti(const SurfaceTopology& s, int k) {
    return stable_betti_series(s, k).back();
}

TruncatedBiSeries stable_perverse_series(const SurfaceTopology& s, int order) {
    s.validate();
    using G = LaurentQT;
    FactorGenerator<G> gen = [&](int m) -> std::optional<ProductFactor<G>> {
        return make_factor<G>(order, {
                                         {{m, m - 1}, +1, s.b1},
                                         {{m, m + 1}, +1, s.b1},
                                         {{m + 1, m - 1}, -1, -1},
                                         {{m, m}, -1, -s.b2},
                                         {{m - 1, m + 1}, -1, -1},
                                     });
    };
    return truncated_product(gen, order).times_binomial_power({1, 1}, Rational(-1), 1);
}

PerverseTable stable_perverse_table(const SurfaceTopology& s, int order) {
    const TruncatedBiSeries h = stable_perverse_series(s, order);
    PerverseTable table(order);
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            const Rational c = h.coeff(i, j);
            if (!is_integer(c) || c < 0) {
                throw InternalIdentityFailure("n_inf^{" + std::to_string(i) + "," + std::to_string(j) +
                                              "} = " + to_string(c));
            }
            table.set(i, j, numerator(c));
        }
    }
    return table;
}

Integer stable_betti_from_perverse(const SurfaceTopology& s, int k) {
    const PerverseTable table = stable_perverse_table(s, k);
    Integer sum(0);
    for (int i = 0; i <= k; ++i) sum += table.at(i, k - i);
    return sum;
}

IdentityReport remark_identity_report(const SurfaceTopology& s, int order, bool perturb) {
    TruncatedBiSeries lhs = stable_perverse_series(s, order).times_binomial_power({1, 1}, Rational(-1), -1);
    if (perturb) {
        lhs.accumulate({0, order}, Rational(1));
    }

    TruncatedBiSeries rhs = substitute_zw_to_qt(goettsche_series(s, 2 * order), order)
                                .times_binomial_power({1, -1}, Rational(-1), 1)
                                .times_binomial_power({0, 2}, Rational(-1), -1);

    IdentityReport report;
    auto li = lhs.terms().begin();
    auto ri = rhs.terms().begin();
    const WeightOrder<LaurentQT> less;
    while (li != lhs.terms().end() || ri != rhs.terms().end()) {
        Exponent e;
        Rational l(0), r(0);
        if (ri == rhs.terms().end() || (li != lhs.terms().end() && less(li->first, ri->first))) {
            e = li->first;
            l = li->second;
            ++li;
        } else if (li == lhs.terms().end() || less(ri->first, li->first)) {
            e = ri->first;
            r = ri->second;
            ++ri;
        } else {
            e = li->first;
            l = li->second;
            r = ri->second;
            ++li;
            ++ri;
        }
        if (l != r) {
            report.holds = false;
            report.first_mismatch = e;
            report.lhs = l;
            report.rhs = r;
            break;
        }
    }
    return report;
}

bool check_remark_identity(const SurfaceTopology& s, int order) {
    return remark_identity_report(s, order).holds;
}

}  // namespace stabctab
