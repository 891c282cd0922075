#include "hankel/motzkin.hpp"

#include <stdexcept>
#include <string>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

std::vector<Int> motzkin_by_binomial_sum(std::size_t p) {
    // Catalan numbers by the exact recurrence C_{k+1} = C_k * 2(2k+1)/(k+2).
    std::vector<Int> catalan(p / 2 + 1);
    catalan[0] = 1;
    for (std::size_t k = 0; k + 1 < catalan.size(); ++k) {
        Int t = catalan[k] * 2 * (2 * static_cast<long>(k) + 1);
        mpz_divexact_ui(catalan[k + 1].get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k + 2));
    }
    std::vector<Int> m(p);
    for (std::size_t n = 0; n < p; ++n) {
        Int acc = 0;
        for (std::size_t k = 0; 2 * k <= n; ++k)
            acc += binomial(n, 2 * k) * catalan[k];
        m[n] = acc;
    }
    return m;
}

std::vector<Int> motzkin_by_series(std::size_t p) {
    // M = 1/(1 - x - x^2 M) is the normal form of M = 1 + x M + x^2 M^2.
    QFE q(0, 2, TruncatedSeries::from_poly(DensePoly{Rat(1), Rat(-1)}, p), TruncatedSeries::constant(Rat(-1), p));
    TruncatedSeries f = qfe_solve(q, p);
    std::vector<Int> m(p);
    for (std::size_t i = 0; i < p; ++i) m[i] = to_integer(f.at(i));
    return m;
}

}  // namespace

std::vector<Int> motzkin_coeffs(std::size_t p) {
    if (p == 0) throw std::invalid_argument("motzkin_coeffs: need at least one term");
    std::vector<Int> a = motzkin_by_binomial_sum(p);
    std::vector<Int> b = motzkin_by_series(p);
    if (a != b)
        throw std::logic_error("motzkin_coeffs: binomial sum and series solution disagree");
    return a;
}

TruncatedSeries motzkin_power(unsigned r, std::size_t precision) {
    if (r == 0) throw std::invalid_argument("motzkin_power: r must be >= 1");
    std::vector<Int> m = motzkin_coeffs(precision);
    std::vector<Rat> base(precision);
    for (std::size_t i = 0; i < precision; ++i) base[i] = Rat(m[i]);
    TruncatedSeries acc = TruncatedSeries::constant(Rat(1), precision);
    TruncatedSeries pow2 = TruncatedSeries(std::move(base));
    unsigned e = r;
    while (e > 0) {
        if (e & 1u) acc = mul(acc, pow2);
        e >>= 1u;
        if (e) pow2 = mul(pow2, pow2);
    }
    return acc;
}

std::vector<Int> motzkin_power_ints(unsigned r, std::size_t precision) {
    TruncatedSeries s = motzkin_power(r, precision);
    std::vector<Int> out(precision);
    for (std::size_t i = 0; i < precision; ++i) {
        out[i] = to_integer(s.at(i));
        if (out[i] <= 0) throw std::logic_error("motzkin_power: nonpositive coefficient");
    }
    return out;
}

QFE motzkin_power_qfe(unsigned r, std::size_t precision) {
    if (r == 0) throw std::invalid_argument("motzkin_power_qfe: r must be >= 1");
    // ah_r = a_r x^(2(r-1)), bh_r = b_r x^(2(r-1)) are polynomials:
    //   ah_{r+1} = -bh_r,  bh_{r+1} = x^2 ah_r + (1-x) bh_r.
    DensePoly ah;  // zero
    DensePoly bh = DensePoly::constant(Rat(1));
    const DensePoly one_minus_x{Rat(1), Rat(-1)};
    for (unsigned i = 1; i < r; ++i) {
        DensePoly ah_next = neg(bh);
        DensePoly bh_next = add(shift_up(ah, 2), mul(one_minus_x, bh));
        ah = std::move(ah_next);
        bh = std::move(bh_next);
    }
    // Substitute M = (x^{2(r-1)} F - ah)/bh into x^2 M^2 + (x-1) M + 1 = 0 and
    // clear denominators:
    //   A = x^{4r-2},
    //   B = x^{2(r-1)} (-2 x^2 ah + (x-1) bh),
    //   C = x^2 ah^2 - (x-1) ah bh + bh^2.
    const DensePoly x_minus_one{Rat(-1), Rat(1)};
    DensePoly A = DensePoly::monomial(Rat(1), 4 * static_cast<std::size_t>(r) - 2);
    DensePoly B = shift_up(add(scale(shift_up(ah, 2), Rat(-2)), mul(x_minus_one, bh)),
                           2 * (static_cast<std::size_t>(r) - 1));
    DensePoly C = add(sub(shift_up(mul(ah, ah), 2), mul(x_minus_one, mul(ah, bh))), mul(bh, bh));

    const auto vc = C.valuation();
    const auto vb = B.valuation();
    if (!vc || (vb && *vb < *vc))
        throw DegenerateEquation("motzkin_power_qfe: constant coefficient cannot be normalized (r=" +
                                 std::to_string(r) + ")");
    QFE q = qfe_from_poly_quadratic(A, B, C, precision);
    if (q.d != 0 || q.u.at(0) != 1)
        throw std::logic_error("motzkin_power_qfe: expected d=0 and u(0)=1");
    return q;
}

}  // namespace hankel
