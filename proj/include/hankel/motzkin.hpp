#ifndef HANKEL_MOTZKIN_HPP
#define HANKEL_MOTZKIN_HPP

#include <cstddef>
#include <vector>

#include "hankel/numbers.hpp"
#include "hankel/qfe.hpp"
#include "hankel/series.hpp"

namespace hankel {

// First p Motzkin numbers M_0..M_{p-1}. Evaluated two independent ways —
// the binomial/Catalan sum M_n = sum_k binom(n,2k) C_k, and the power-series
// solution of M = 1 + x M + x^2 M^2 — and cross-asserted before returning.
std::vector<Int> motzkin_coeffs(std::size_t p);

// M(x)^r to the given precision, via binary exponentiation on series.
// All coefficients are positive integers.
TruncatedSeries motzkin_power(unsigned r, std::size_t precision);

// Convenience integer view of motzkin_power.
std::vector<Int> motzkin_power_ints(unsigned r, std::size_t precision);

// Quadratic functional equation satisfied by M(x)^r, in normal form with
// d = 0, u(0) = 1, k >= 1, v(0) != 0; u and v are emitted as series at the
// requested precision. Derivation: write M^r = a_r + b_r M with Laurent
// polynomials via a_{r+1} = -b_r/x^2, b_{r+1} = a_r + b_r (1-x)/x^2,
// eliminate M through x^2 M^2 + (x-1) M + 1 = 0, and restore normal form.
// Throws DegenerateEquation if the normalization is impossible.
QFE motzkin_power_qfe(unsigned r, std::size_t precision);

}  // namespace hankel

#endif
