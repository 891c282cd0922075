#include <doctest.h>

#include "hankel/errors.hpp"
#include "hankel/motzkin.hpp"
#include "hankel/qfe.hpp"

using namespace hankel;

TEST_CASE("the Motzkin equation solves to the Motzkin series") {
    const std::size_t p = 16;
    QFE q(0, 2, TruncatedSeries::from_poly(DensePoly{Rat(1), Rat(-1)}, p),
          TruncatedSeries::constant(Rat(-1), p));
    TruncatedSeries f = qfe_solve(q, p);
    std::vector<Int> m = motzkin_coeffs(p);
    for (std::size_t i = 0; i < p; ++i) CHECK(f.at(i) == Rat(m[i]));
    CHECK(qfe_residual(q, f).is_zero_to_precision());
}

TEST_CASE("the derived M^3 equation solves back to M^3") {
    const std::size_t p = 14;
    QFE q = motzkin_power_qfe(3, p);
    TruncatedSeries f = qfe_solve(q, p);
    CHECK(f.at(0) == 1);
    CHECK(f.at(1) == 3);
    CHECK(f.at(2) == 9);
    CHECK(f.at(3) == 25);
    TruncatedSeries m3 = motzkin_power(3, p);
    CHECK(equal_to_shared_precision(f, m3));
}

TEST_CASE("solve respects precision limits") {
    QFE q(0, 2, TruncatedSeries::from_poly(DensePoly{Rat(1), Rat(-1)}, 6),
          TruncatedSeries::constant(Rat(-1), 6));
    CHECK(q.solvable_precision() == 6);
    CHECK_THROWS_AS(qfe_solve(q, 9), InsufficientPrecision);
}

TEST_CASE("QFE invariants are enforced") {
    CHECK_THROWS_AS(QFE(0, 0, TruncatedSeries::constant(Rat(1), 4), TruncatedSeries::constant(Rat(1), 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(QFE(-1, 2, TruncatedSeries::constant(Rat(1), 4), TruncatedSeries::constant(Rat(1), 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(QFE(0, 2, TruncatedSeries::zero(4), TruncatedSeries::constant(Rat(1), 4)),
                    ZeroConstantTerm);
}

TEST_CASE("quadratic restoration round-trips a known equation") {
    // x^2 F^2 + (x - 1) F + 1 = 0 is the Motzkin quadratic: restored form has
    // d = 0, k = 2, u = 1 - x, v = -1, and solves to the Motzkin series.
    const std::size_t p = 10;
    QFE q = qfe_from_poly_quadratic(DensePoly::monomial(Rat(1), 2), DensePoly{Rat(-1), Rat(1)},
                                    DensePoly::constant(Rat(1)), p);
    CHECK(q.d == 0);
    CHECK(q.k == 2);
    CHECK(q.u.at(0) == 1);
    CHECK(q.u.at(1) == -1);
    CHECK(q.v.at(0) == -1);
    TruncatedSeries f = qfe_solve(q, p);
    std::vector<Int> m = motzkin_coeffs(p);
    for (std::size_t i = 0; i < p; ++i) CHECK(f.at(i) == Rat(m[i]));
}

TEST_CASE("quadratic restoration error paths") {
    const std::size_t p = 8;
    // C = 0: the solution would be identically zero
    CHECK_THROWS_AS(qfe_from_poly_quadratic(DensePoly::monomial(Rat(1), 2), DensePoly::constant(Rat(1)),
                                            DensePoly{}, p),
                    DegenerateEquation);
    // B has positive valuation after stripping: no unit denominator
    CHECK_THROWS_AS(qfe_from_poly_quadratic(DensePoly::constant(Rat(1)), DensePoly::monomial(Rat(1), 1),
                                            DensePoly::constant(Rat(1)), p),
                    NonUnitNumerator);
    // k would be 0
    CHECK_THROWS_AS(qfe_from_poly_quadratic(DensePoly::constant(Rat(1)), DensePoly::constant(Rat(1)),
                                            DensePoly::constant(Rat(1)), p),
                    DegenerateEquation);
}
