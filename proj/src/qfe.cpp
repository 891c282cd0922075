#include "hankel/qfe.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hankel/errors.hpp"

namespace hankel {

QFE::QFE(long d_, long k_, TruncatedSeries u_, TruncatedSeries v_)
    : d(d_), k(k_), u(std::move(u_)), v(std::move(v_)) {
    if (d < 0) throw std::invalid_argument("QFE: d must be >= 0");
    if (k < 1) throw std::invalid_argument("QFE: k must be >= 1");
    if (u.empty() || u.at(0) == 0) throw ZeroConstantTerm("QFE: u(0) must be nonzero");
    if (v.empty() || v.at(0) == 0) throw ZeroConstantTerm("QFE: v(0) must be nonzero");
}

std::size_t QFE::solvable_precision() const {
    return std::min(u.precision() + static_cast<std::size_t>(d),
                    v.precision() + static_cast<std::size_t>(d + k));
}

TruncatedSeries qfe_solve(const QFE& q, std::size_t p) {
    if (p > q.solvable_precision())
        throw InsufficientPrecision("qfe_solve: requested order " + std::to_string(p) +
                                    " exceeds solvable precision " +
                                    std::to_string(q.solvable_precision()));
    if (p == 0) return TruncatedSeries{};
    const std::size_t pd = p > static_cast<std::size_t>(q.d) ? p - static_cast<std::size_t>(q.d) : 1;
    const TruncatedSeries u_t = truncate(q.u, pd);
    const TruncatedSeries v_t = truncate(q.v, pd);
    TruncatedSeries f = TruncatedSeries::zero(p);
    // Each round fixes at least k further orders; one extra round to verify
    // the fixed point was reached.
    const std::size_t rounds = pd / static_cast<std::size_t>(q.k) + 2;
    for (std::size_t it = 0; it < rounds; ++it) {
        TruncatedSeries den = add(u_t, truncate(shift(mul(v_t, f), q.k), pd));
        TruncatedSeries next = shift(inv(den), q.d);  // precision pd + d >= p
        next = truncate(next, p);
        if (equal_to_shared_precision(next, f)) return next;
        f = std::move(next);
    }
    throw std::logic_error("qfe_solve: fixed point not reached");
}

TruncatedSeries qfe_residual(const QFE& q, const TruncatedSeries& f) {
    TruncatedSeries r = mul(q.u, f);
    r = add(r, shift(mul(q.v, mul(f, f)), q.k));
    const std::size_t p = r.precision();
    return sub(r, TruncatedSeries::monomial(Rat(1), static_cast<std::size_t>(q.d), p));
}

namespace {

QFE restore(const TruncatedSeries& A, const TruncatedSeries& B, const TruncatedSeries& C) {
    // F*(B + A*F) = -C. Valuations decide the normal form.
    const auto va = A.valuation();
    const auto vb = B.valuation();
    const auto vc = C.valuation();
    if (!va || !vb)
        throw DegenerateEquation("quadratic restoration: A or B vanishes to working precision");
    if (!vc)
        throw DegenerateEquation("quadratic restoration: C vanishes to working precision");
    const std::size_t s = std::min({*va, *vb, *vc});
    if (*vb != s)
        throw NonUnitNumerator("quadratic restoration: linear coefficient has positive valuation");
    const std::size_t d = *vc - s;
    const long k = static_cast<long>(*va - s);
    if (k < 1)
        throw DegenerateEquation("quadratic restoration: quadratic coefficient must carry x^k, k >= 1");
    // Unit part of -C after stripping x^s.
    TruncatedSeries ctil = shift(neg(C), -static_cast<long>(s + d));
    TruncatedSeries u = div(shift(B, -static_cast<long>(s)), ctil);
    TruncatedSeries v = div(shift(A, -static_cast<long>(s + static_cast<std::size_t>(k))), ctil);
    return QFE(static_cast<long>(d), k, std::move(u), std::move(v));
}

}  // namespace

QFE qfe_from_quadratic(const TruncatedSeries& A, const TruncatedSeries& B, const TruncatedSeries& C) {
    return restore(A, B, C);
}

QFE qfe_from_poly_quadratic(const DensePoly& A, const DensePoly& B, const DensePoly& C,
                            std::size_t precision) {
    const auto va = A.valuation();
    const auto vb = B.valuation();
    const auto vc = C.valuation();
    if (!va || !vb) throw DegenerateEquation("quadratic restoration: A or B is the zero polynomial");
    if (!vc) throw DegenerateEquation("quadratic restoration: C is the zero polynomial");
    const std::size_t s = std::min({*va, *vb, *vc});
    if (*vb != s)
        throw NonUnitNumerator("quadratic restoration: linear coefficient has positive valuation");
    const std::size_t d = *vc - s;
    const long k = static_cast<long>(*va - s);
    if (k < 1)
        throw DegenerateEquation("quadratic restoration: quadratic coefficient must carry x^k, k >= 1");
    const DensePoly ctil = shift_down(neg(C), s + d);
    const DensePoly bs = shift_down(B, s);
    const DensePoly as = shift_down(A, s + static_cast<std::size_t>(k));
    // Series division only consumes the first `precision` coefficients, so
    // truncating the exact polynomials here is harmless.
    TruncatedSeries ctil_s = TruncatedSeries::from_poly(ctil, precision);
    TruncatedSeries u = div(TruncatedSeries::from_poly(bs, precision), ctil_s);
    TruncatedSeries v = div(TruncatedSeries::from_poly(as, precision), ctil_s);
    return QFE(static_cast<long>(d), k, std::move(u), std::move(v));
}

}  // namespace hankel
