#pragma once

#include "stabctab/arith.hpp"
#include "stabctab/surd.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabctab {

/// Integer coordinates of a divisor class in the Gram basis.
using DivisorClass = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/* Numerical lattice Num(S) with the data needed to bound decompositions:
 *
 *   gram           intersection form on the chosen basis (symmetric)
 *   ample_witness  an ample class H
 *   ortho_basis    D_1 .. D_rho, pairwise orthogonal, D_1 ample
 *   ample_tests    n_l (l = 2..rho) such that n_l D_1 + D_l is ample
 *   nef_classes    optional extra nef classes N; effective classes satisfy N.C >= 0
 *   denominator    optional bound: denominator * (ortho coordinates) is integral
 *                  for every integral class
 */
struct LatticeModel {
    std::string name;
    std::vector<std::vector<std::int64_t>> gram;
    DivisorClass ample_witness;
    std::vector<RationalVector> ortho_basis;
    std::vector<std::int64_t> ample_tests;
    std::vector<DivisorClass> nef_classes;
    std::optional<std::int64_t> denominator;

    int rank() const { return static_cast<int>(gram.size()); }

    Rational dot(const RationalVector& x, const RationalVector& y) const;
    Integer dot(const DivisorClass& x, const DivisorClass& y) const;

    /// A_l = n_l D_1 + D_l for l = 2..rho (index 0 holds A_2).
    std::vector<RationalVector> ample_test_classes() const;

    /* Throws InvalidLattice for shape errors, an asymmetric Gram matrix,
     * H^2 <= 0, a non-orthogonal basis or one violating the Hodge index
     * signature (D_1^2 > 0, D_l^2 < 0), or a non-positive A_l^2.
     * Throws BasisDenominatorError if the basis is singular or the declared
     * denominator does not clear the ortho coordinates. */
    void validate() const;
};

/// Rank-2 lattice of a bielliptic surface in the (A, B) basis with A.B = 2.
LatticeModel bielliptic_rank2_preset();
/// U + E8(-1), the numerical lattice of an Enriques surface, with H = e + f.
LatticeModel enriques_preset();
/// Looks up "bielliptic-rank2" or "enriques"; nullopt otherwise.
std::optional<LatticeModel> lattice_preset(const std::string& name);

struct Decomposition {
    DivisorClass first;
    DivisorClass second;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

constexpr std::uint64_t kDefaultEnumerationLimit = 20'000'000;

/* All integral pairs (theta_1, theta_2) with theta_1 + theta_2 = beta and
 * D_1.theta_i > 0, A_l.theta_i > 0, N.theta_i >= 0 for both parts. The
 * search region is cut out in ortho coordinates by
 *
 *   0 < c_1 < a_1,   a_l - k_l a_1 < c_l < k_l a_1,   k_l = n_l D_1^2 / (-D_l^2),
 *
 * turned into integer constraints on Gram coordinates and searched depth
 * first. Pairs are sorted lexicographically by theta_1. Throws
 * NotEffectiveCandidate if beta.H <= 0 and EnumerationTooLarge once the
 * search visits more than `limit` points. */
std::vector<Decomposition> decompose(const LatticeModel& lattice, const DivisorClass& beta,
                                     std::uint64_t limit = kDefaultEnumerationLimit);

// ---------------------------------------------------------------------------
// Linear systems and codimension bounds on Enriques and bielliptic surfaces.

struct IsotropicMultiple {
    int k = 1;                    ///< D = kE (numerically), E primitive with E^2 = 0
    bool plus_canonical = false;  ///< D = kE + K_S
};

/// dim|D| for a nonzero nef effective D on an Enriques surface: D^2 / 2 when
/// D^2 > 0; floor(k/2) or floor((k-1)/2) when D^2 = 0.
Integer enriques_dim_ls(const Integer& d_sq, std::optional<IsotropicMultiple> iso = std::nullopt);

/// chi(O_S(D)) = s t gamma for D of numerical class sA + tB on a bielliptic surface.
Rational bielliptic_chi(const Rational& s, const Rational& t, const Integer& gamma);

/// p_a(beta) = beta^2 / 2 + 1 when K_S is numerically trivial.
Integer arithmetic_genus(const Integer& beta_sq);

struct CaseBound {
    std::string label;
    Surd value;
};

struct CodimBound {
    Surd value;                          ///< minimum over the cases
    std::vector<std::string> governing;  ///< labels attaining the minimum
    std::vector<CaseBound> cases;
};

enum class EnriquesCases {
    All,           ///< 1.1, 1.2, 1.3, 2.1, 2.2
    NefComponents  ///< 1.1, 1.2, 1.3 only (no (-2)-curves, e.g. a generic surface)
};

/* Lower bound for codim(|d beta| minus |d beta|^int) on an Enriques surface:
 *
 *   1.1  d sqrt(2 beta^2) - 2     1.2  d - 1/2     1.3  (d^2 beta^2 - 2) / 4
 *   2.1  d / 2                    2.2  d - 1/2 */
CodimBound enriques_codim_bound(const Integer& beta_sq, int d, EnriquesCases cases = EnriquesCases::All);

/// beta = a lambda A + b mu B on a bielliptic surface with A.B = gamma.
/// lambda, mu and gamma depend on the surface type and have no defaults;
/// a value-initialized struct fails validate().
struct BiellipticParams {
    Integer a;
    Integer b;
    Rational lambda;
    Rational mu;
    Integer gamma;

    /// Throws InvalidParameters unless a, b, lambda, mu, gamma > 0 and
    /// a b lambda mu gamma is an integer.
    void validate() const;
    /// beta^2 = 2 a b lambda mu gamma.
    Rational beta_sq() const;
};

/// dim|d beta| = d^2 a b lambda mu gamma - 1.
Rational bielliptic_dim_ls(const BiellipticParams& p, int d);

/* Lower bound for the same codimension on a bielliptic surface:
 *
 *   "1"            d sqrt(beta^2) - 1                   (all a_i, b_i > 0)
 *   "2"            (d a lambda - 1) mu gamma + 1        (a_1 = 0, b_2 > 0; and its mirror)
 *   "2/b2=0"       d^2 a b lambda mu gamma - d b mu gamma - d a lambda gamma
 *
 * When d a lambda < 1 the "2" expression is minimized over its admissible
 * b_1 in [1, d b - 1] instead (it is decreasing in b_1 there). */
CodimBound bielliptic_codim_bound(const BiellipticParams& p, int d);

/// N >= 2 ceil(c) - 2, never below -2.
Integer n_lower_bound(const Surd& codim_bound);

/// The five terms of the stabilization threshold d(beta_0, i, j), in order:
/// 2, i+1, ceil((i+j+2)/2), ceil((i+j+6)/(2 sqrt(2 beta_0^2))), ceil(sqrt((2i+2j+6)/beta_0^2)).
std::vector<Integer> enriques_d0_terms(const Integer& beta_sq, int i, int j);
/// max of enriques_d0_terms.
Integer enriques_d0(const Integer& beta_sq, int i, int j);

}  // namespace stabctab
