#pragma once

#include "stabctab/genfunc.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace stabctab {

/* Betti numbers b_m(C^[l]) of relative Hilbert schemes of the universal curve
 * in the stable regime, for 0 <= l <= order and 0 <= m <= order. In that
 * regime C^[l] is a projective bundle over S^[l] with fibres of large
 * dimension, so b_m(C^[l]) = sum_{n <= m/2} b_{m-2n}(S^[l]). */
class RelHilbBettiTower {
public:
    RelHilbBettiTower(int order, std::map<std::pair<int, int>, Integer> values)
        : order_(order), values_(std::move(values)) {}

    int order() const { return order_; }
    const std::map<std::pair<int, int>, Integer>& values() const { return values_; }

    /// b_m(C^[l]); throws OutOfOrder outside 0 <= l, m <= order.
    Integer at(int l, int m) const;

private:
    int order_;
    std::map<std::pair<int, int>, Integer> values_;
};

RelHilbBettiTower build_tower(const SurfaceTopology& s, int order);

enum class SolveRead { Tower, Table };

/// Observer for the dependency structure of solve_perverse: called with
/// (kind, first index, second index) for every value the solver consumes
/// while producing entry (i, j).
using SolveReadHook = std::function<void(int i, int j, SolveRead kind, int x, int y)>;

/* Recovers n^{i,j} for i + j <= order from the tower, by induction on i:
 *
 *   n^{0,j}   = 1 if j even, 0 otherwise
 *   n^{i,m-i} = b_m(C^[i]) - b_m(C^[i-1]) - sum_{i' < i} n^{i', m - i' - 2(i - i')}
 *
 * Throws InconsistentTower if the base row of the tower disagrees with the
 * stable base case or any entry comes out negative. */
PerverseTable solve_perverse(const RelHilbBettiTower& tower, const SolveReadHook& hook = {});

struct OracleReport {
    bool agree = true;
    std::optional<TableDifference> first_difference;  ///< left = recursion, right = H(q,t)
};

OracleReport oracle_report(const SurfaceTopology& s, int order);
bool oracle_check(const SurfaceTopology& s, int order);

}  // namespace stabctab
