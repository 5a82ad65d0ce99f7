#pragma once

#include "stabctab/arith.hpp"
#include "stabctab/series.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace stabctab {

constexpr int kDefaultOrder = 12;

/// Topological inputs of a surface S: b1(S), b2(S) and chi(O_S).
struct SurfaceTopology {
    int b1 = 0;
    int b2 = 1;
    int chi_o = 0;

    /// Throws InvalidSurface unless b1 is even and nonnegative and b2 > 0.
    void validate() const;

    static SurfaceTopology enriques() { return {0, 10, 1}; }
    static SurfaceTopology bielliptic() { return {2, 2, 0}; }

    friend bool operator==(const SurfaceTopology&, const SurfaceTopology&) = default;
};

/// Table (i, j) -> n^{i,j} of nonnegative integers for i + j <= order.
class PerverseTable {
public:
    explicit PerverseTable(int order) : order_(order) {}

    int order() const { return order_; }
    const std::map<std::pair<int, int>, Integer>& entries() const { return entries_; }

    /// Zero for absent entries; throws OutOfOrder when i + j > order.
    Integer at(int i, int j) const;
    void set(int i, int j, Integer value);

    friend bool operator==(const PerverseTable&, const PerverseTable&) = default;

private:
    int order_;
    std::map<std::pair<int, int>, Integer> entries_;
};

struct TableDifference {
    int i;
    int j;
    Integer left;
    Integer right;
};

/// First entry (in (i, j) order) where two tables of equal order disagree.
std::optional<TableDifference> first_difference(const PerverseTable& left, const PerverseTable& right);

/// Goettsche's product for sum b_i(S^[n]) z^i w^n, exact for n <= order.
GoettscheSeries goettsche_series(const SurfaceTopology& s, int order);

/// b_k(S^[n]); zero when k > 4n.
Integer hilb_betti(const SurfaceTopology& s, int n, int k);

/// Row n of the Betti table: b_0(S^[n]) .. b_{4n}(S^[n]), for n = 0..max_n.
std::vector<std::vector<Integer>> hilb_betti_table(const SurfaceTopology& s, int max_n);

/// b_0^inf .. b_max_k^inf from the one-variable stable product.
std::vector<Integer> stable_betti_series(const SurfaceTopology& s, int max_k);
Integer stable_betti(const SurfaceTopology& s, int k);

/// H(q, t), the two-variable stable perverse product, truncated at order K.
TruncatedBiSeries stable_perverse_series(const SurfaceTopology& s, int order);

/// n_inf^{i,j} read off H(q, t); throws InternalIdentityFailure if a
/// coefficient is negative or non-integral.
PerverseTable stable_perverse_table(const SurfaceTopology& s, int order);

/// Sum over i of n_inf^{i, k-i}.
Integer stable_betti_from_perverse(const SurfaceTopology& s, int k);

struct IdentityReport {
    bool holds = true;
    std::optional<Exponent> first_mismatch;  ///< (q-exponent, t-exponent)
    Rational lhs;
    Rational rhs;
};

/* Compares H(q,t)/(1 - qt) with G(t, q/t) (1 - q/t) / (1 - t^2) coefficient by
 * coefficient. `perturb` adds 1 to one left-hand coefficient, as a negative
 * control for callers that want to see a located failure. */
IdentityReport remark_identity_report(const SurfaceTopology& s, int order, bool perturb = false);
bool check_remark_identity(const SurfaceTopology& s, int order);

}  // namespace stabctab
