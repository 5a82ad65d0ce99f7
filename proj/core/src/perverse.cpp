#include "stabctab/perverse.hpp"

#include "stabctab/error.hpp"

#include <string>

namespace stabctab {

Integer RelHilbBettiTower::at(int l, int m) const {
    if (l < 0 || m < 0 || l > order_ || m > order_) {
        throw OutOfOrder("tower entry (" + std::to_string(l) + "," + std::to_string(m) + ") outside order " +
                         std::to_string(order_));
    }
    auto it = values_.find({l, m});
    return it == values_.end() ? Integer(0) : it->second;
}

RelHilbBettiTower build_tower(const SurfaceTopology& s, int order) {
    if (order < 0) throw OutOfOrder("negative tower order");
    const auto betti = hilb_betti_table(s, order);
    std::map<std::pair<int, int>, Integer> values;
    for (int l = 0; l <= order; ++l) {
        const auto& row = betti[static_cast<std::size_t>(l)];
        for (int m = 0; m <= order; ++m) {
            Integer sum(0);
            for (int k = m; k >= 0; k -= 2) {
                if (k < static_cast<int>(row.size())) sum += row[static_cast<std::size_t>(k)];
            }
            if (sum != 0) values.emplace(std::pair{l, m}, std::move(sum));
        }
    }
    return RelHilbBettiTower(order, std::move(values));
}

PerverseTable solve_perverse(const RelHilbBettiTower& tower, const SolveReadHook& hook) {
    const int order = tower.order();
    PerverseTable table(order);

    auto tower_at = [&](int i, int j, int l, int m) {
        if (hook) hook(i, j, SolveRead::Tower, l, m);
        return tower.at(l, m);
    };
    auto table_at = [&](int i, int j, int x, int y) {
        if (hook) hook(i, j, SolveRead::Table, x, y);
        return table.at(x, y);
    };

    for (int j = 0; j <= order; ++j) {
        const Integer expected(j % 2 == 0 ? 1 : 0);
        if (tower_at(0, j, 0, j) != expected) {
            throw InconsistentTower("b_" + std::to_string(j) + "(C^[0]) = " + to_string(tower.at(0, j)) +
                                    ", expected " + to_string(expected));
        }
        table.set(0, j, expected);
    }

    for (int i = 1; i <= order; ++i) {
        for (int m = i; m <= order; ++m) {
            const int j = m - i;
            Integer value = tower_at(i, j, i, m) - tower_at(i, j, i - 1, m);
            for (int ip = 0; ip < i; ++ip) {
                const int jp = m - ip - 2 * (i - ip);
                if (jp >= 0) value -= table_at(i, j, ip, jp);
            }
            if (value < 0) {
                throw InconsistentTower("n^{" + std::to_string(i) + "," + std::to_string(j) + "} = " +
                                        to_string(value) + " < 0");
            }
            table.set(i, j, std::move(value));
        }
    }
    return table;
}

OracleReport oracle_report(const SurfaceTopology& s, int order) {
    const PerverseTable recursion = solve_perverse(build_tower(s, order));
    const PerverseTable product = stable_perverse_table(s, order);
    OracleReport report;
    report.first_difference = first_difference(recursion, product);
    report.agree = !report.first_difference.has_value();
    return report;
}

bool oracle_check(const SurfaceTopology& s, int order) { return oracle_report(s, order).agree; }

}  // namespace stabctab
