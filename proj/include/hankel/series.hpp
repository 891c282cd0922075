#ifndef HANKEL_SERIES_HPP
#define HANKEL_SERIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hankel/numbers.hpp"
#include "hankel/poly.hpp"

namespace hankel {

// Truncated formal power series with explicit precision: exactly
// precision() coefficients are known, indices 0 .. precision()-1.
// Precision is data, not a global; every operation below states its output
// precision. Reading at or beyond the precision throws InsufficientPrecision —
// a missing coefficient is never a silent zero.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

    static TruncatedSeries zero(std::size_t precision);
    static TruncatedSeries constant(const Rat& c, std::size_t precision);
    // c * x^m, known to the given precision (must exceed m).
    static TruncatedSeries monomial(const Rat& c, std::size_t m, std::size_t precision);
    // First `precision` coefficients of a polynomial. Exact iff precision > degree.
    static TruncatedSeries from_poly(const DensePoly& p, std::size_t precision);

    std::size_t precision() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    const Rat& at(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Smallest i < precision with nonzero coefficient; nullopt if the series
    // is zero to its full precision.
    std::optional<std::size_t> valuation() const;
    bool is_zero_to_precision() const { return !valuation().has_value(); }

    std::string str(std::size_t max_terms = 12) const;

private:
    std::vector<Rat> coeffs_;
};

// prec(out) = min(prec(a), prec(b))
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
// prec(out) = prec(a)
TruncatedSeries neg(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Rat& c);
// Cauchy product; prec(out) = min(prec(a), prec(b))
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Exact polynomial times series; prec(out) = prec(a)
TruncatedSeries mul_poly(const TruncatedSeries& a, const DensePoly& p);
// Multiplicative inverse; requires a(0) != 0 (ZeroConstantTerm otherwise);
// prec(out) = prec(a)
TruncatedSeries inv(const TruncatedSeries& a);
// a / b, requires b(0) != 0; prec(out) = min(prec(a), prec(b))
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);
// Multiply by x^m (m >= 0): prec(out) = prec(a) + m.
// Divide by x^|m| (m < 0): requires the first |m| coefficients to be exactly
// zero (NegativeValuation otherwise); prec(out) = prec(a) - |m|.
TruncatedSeries shift(const TruncatedSeries& a, long m);
// prec(out) = min(prec(a), p)
TruncatedSeries truncate(const TruncatedSeries& a, std::size_t p);

// Unique decomposition u = u_L + x^(d+2) * u_H with deg(u_L) <= d+1.
// Requires precision(u) >= d+2 (InsufficientPrecision otherwise);
// prec(u_H) = prec(u) - (d+2).
struct SplitResult {
    DensePoly low;
    TruncatedSeries high;
};
SplitResult split(const TruncatedSeries& u, std::size_t d);

bool equal_to_shared_precision(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace hankel

#endif
