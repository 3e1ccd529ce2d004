#pragma once

#include "compchains/composition.hpp"
#include "compchains/polyfrac.hpp"

namespace compchains {

/// Fundamental quasi-symmetric polynomial L_alpha in x_1..x_m: the sum of
/// x_{i_1}...x_{i_n} over 1 <= i_1 <= ... <= i_n <= m, strict at every
/// descent of alpha.
MultiPoly fundamental(const Composition& alpha, int m);

/// L_(1) L_alpha against the sum of L_beta over the covers beta of alpha in
/// S^inf. m < 0 means weight(alpha) + 2.
bool verify_product_rule(const Composition& alpha, int m = -1);

/// The coefficient of x_{i_1}^{a_1}...x_{i_r}^{a_r} (i_1 < ... < i_r) only
/// depends on (a_1, ..., a_r).
bool is_quasi_symmetric(const MultiPoly& p, int m);

/// Rank over Q of the coefficient matrix of {L_alpha : alpha of weight n}.
int fundamentals_rank(int n, int m);

}  // namespace compchains
