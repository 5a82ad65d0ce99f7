#pragma once

// Independent reference computations. None of these use the library's series
// type; they work on dense coefficient arrays with plain loops.

#include "stabctab/arith.hpp"
#include "stabctab/nslattice.hpp"

#include <vector>

namespace testsupport {

using stabctab::Integer;

/// Coefficients 0..max_k of prod (1+q^(2m-1))^b1 (1+q^(2m+1))^b1 / ((1-q^(2m))^(b2+1) (1-q^(2m+2))).
std::vector<Integer> dense_stable_betti(int b1, int b2, int max_k);

/// table[n][i] = coefficient of z^i w^n of Goettsche's product, n <= max_n, i <= 4n.
std::vector<std::vector<Integer>> dense_goettsche(int b1, int b2, int max_n);

/// table[a][b] = coefficient of q^a t^b of H(q,t) for a, b <= bound.
std::vector<std::vector<Integer>> dense_perverse(int b1, int b2, int bound);

/// mu of a germ that is semi-quasi-homogeneous with principal part x^p + y^q.
inline int milnor_brieskorn(int p, int q) { return (p - 1) * (q - 1); }

/// Number of gaps of the numerical semigroup generated by the given values.
int semigroup_gaps(const std::vector<int>& generators);

/// Pairs found by scanning the box [-r, r]^rank with the same positivity tests.
std::vector<stabctab::Decomposition> brute_force_decompose(const stabctab::LatticeModel& lattice,
                                                           const stabctab::DivisorClass& beta, int r);

/* Rank 2 only: a box radius containing every solution. The strict tests D_1
 * and A_2 give 0 < f(theta) < f(beta) for two independent functionals, so the
 * solutions lie in a parallelogram; its vertices are solved by Cramer's rule. */
int rank2_search_radius(const stabctab::LatticeModel& lattice, const stabctab::DivisorClass& beta);

}  // namespace testsupport
