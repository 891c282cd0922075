#ifndef HANKEL_ORACLE_HPP
#define HANKEL_ORACLE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hankel/numbers.hpp"

namespace hankel {

// Direct Hankel determinant evaluation: H_n(a) = det(a_{i+j})_{0<=i,j<n},
// H_0 = 1 by convention. Fraction-free (Bareiss) elimination over the
// integers; zero pivots fall back to a row search, and an all-zero column
// means the determinant is zero. Requires at least 2n-1 coefficients for
// order n >= 1 (InsufficientCoefficients otherwise).
Int hankel_det(std::span<const Int> seq, std::size_t n);

// Rational sequences: clear denominators to a common L, evaluate the integer
// determinant, divide back by L^n.
Rat hankel_det(std::span<const Rat> seq, std::size_t n);

// All orders 0..n_max, each evaluated independently (the oracle stays as
// simple as possible; no shared elimination state).
std::vector<Int> hankel_table(std::span<const Int> seq, std::size_t n_max);
std::vector<Rat> hankel_table(std::span<const Rat> seq, std::size_t n_max);

// Plain determinant of a dense integer matrix by Bareiss elimination.
// Exposed for direct use and for equivalence testing against slow oracles.
Int bareiss_det(std::vector<Int> m, std::size_t n);

}  // namespace hankel

#endif
