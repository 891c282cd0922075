#ifndef HANKEL_QFE_HPP
#define HANKEL_QFE_HPP

#include <cstddef>

#include "hankel/poly.hpp"
#include "hankel/series.hpp"

namespace hankel {

// Quadratic functional equation in normal form
//
//     F(x) = x^d / ( u(x) + x^k v(x) F(x) ),
//
// with u(0) != 0, v(0) != 0, d >= 0, k >= 1. The equation determines a unique
// power series F with valuation d and leading coefficient 1/u(0).
struct QFE {
    long d = 0;
    long k = 1;
    TruncatedSeries u;
    TruncatedSeries v;

    QFE() = default;
    QFE(long d_, long k_, TruncatedSeries u_, TruncatedSeries v_);

    // Largest order to which the solution series is determined:
    // min(prec(u) + d, prec(v) + d + k).
    std::size_t solvable_precision() const;
};

// Unique power-series solution to precision p (fixed-point iteration,
// gaining at least k orders per round). Throws InsufficientPrecision when
// p > solvable_precision().
TruncatedSeries qfe_solve(const QFE& q, std::size_t p);

// u*F + x^k*v*F^2 - x^d, which must vanish to the shared precision when F
// solves the equation. Kept for residual checks.
TruncatedSeries qfe_residual(const QFE& q, const TruncatedSeries& f);

// Normal-form restoration: given a quadratic A*F^2 + B*F + C = 0 known to be
// satisfied by a power series F, rewrite it as F = x^d' / (u' + x^k' v' F).
// Steps: strip the common power of x, require the resulting B to be a unit
// (NonUnitNumerator otherwise), read d' = val(C), divide through by the unit
// part of -C, and read k' = val(A). DegenerateEquation if C vanishes to
// precision or k' would be < 1.
QFE qfe_from_quadratic(const TruncatedSeries& A, const TruncatedSeries& B, const TruncatedSeries& C);

// Same restoration starting from exact polynomials; u', v' are emitted as
// series at the requested precision.
QFE qfe_from_poly_quadratic(const DensePoly& A, const DensePoly& B, const DensePoly& C,
                            std::size_t precision);

}  // namespace hankel

#endif
