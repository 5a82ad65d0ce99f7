#pragma once

#include "stabctab/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabctab {

/// Largest truncation degree tried when measuring a local quotient dimension.
constexpr int kLocalDimensionCap = 64;

/// A plane curve germ f in Q[x, y] with f(0, 0) = 0.
class CurveGerm {
public:
    /// Throws InvalidGerm for the zero polynomial or f(0, 0) != 0.
    explicit CurveGerm(Poly2 poly);
    static CurveGerm parse(std::string_view text) { return CurveGerm(parse_poly2(text)); }

    const Poly2& poly() const { return poly_; }

private:
    Poly2 poly_;
};

struct Branch {
    UniPoly x;
    UniPoly y;
};

/* Parametrizations t -> (x(t), y(t)) of the branches of a germ. When
 * `declared_truncation` is T0, each parametrization is only trusted modulo
 * t^(T0 + 1); nullopt means the polynomials are exact parametrizations. */
struct BranchSet {
    std::vector<Branch> branches;
    std::optional<int> declared_truncation;
};

/* dim_Q Q[[x,y]] / (generators), computed as the stable value of
 * d_N = dim Q[x,y] / (I + m^N) for N = 2, 4, 8, ... . Once d_N = d_{N+1},
 * Nakayama gives m^N inside I in the local ring, so d_N is the local
 * dimension. Throws NonIsolatedSingularity if no N <= cap stabilizes. */
int local_quotient_dimension(std::span<const Poly2> generators, int cap = kLocalDimensionCap);

/// d_N itself, for a single truncation degree N.
int truncated_quotient_dimension(std::span<const Poly2> generators, int n);

/// Milnor number: local dimension of Q[[x,y]] / (f_x, f_y). Zero at smooth points.
int milnor(const CurveGerm& g, int cap = kLocalDimensionCap);

/// Tjurina number: local dimension of Q[[x,y]] / (f, f_x, f_y).
int tjurina(const CurveGerm& g, int cap = kLocalDimensionCap);

/// Number of branches; throws EmptyBranchSet.
int branch_count(const BranchSet& b);

/* Checks that each branch passes through the origin, is not constant, lies
 * on the curve to the declared precision (InvalidBranch otherwise) and that
 * the declared precision is at least 2 mu + 2 (TruncationTooSmall). */
void validate_branches(const CurveGerm& g, const BranchSet& b, int mu);

/* delta = dim (normalization / local ring), via the image of monomials in
 * the product of Q[[t_i]]. Modulo t^T on every branch the cokernel has
 * dimension r T - rank; it equals delta as soon as T reaches the conductor,
 * which is bounded by 2 delta = mu + r - 1. */
int delta(const CurveGerm& g, const BranchSet& b);

/// Cokernel dimension r T - rank at a fixed per-branch truncation T.
int delta_candidate(const BranchSet& b, int truncation);

/// mu = 2 delta - r + 1.
bool milnor_formula_check(const CurveGerm& g, const BranchSet& b);

struct GermInvariants {
    int mu = 0;
    int tau = 0;
    std::optional<int> delta;
    std::optional<int> r;
    std::optional<bool> milnor_formula;
};

GermInvariants analyze_germ(const CurveGerm& g, const std::optional<BranchSet>& b = std::nullopt);

}  // namespace stabctab
