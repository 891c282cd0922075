#include <doctest.h>

#include "hankel/errors.hpp"
#include "hankel/poly.hpp"

using namespace hankel;

TEST_CASE("poly arithmetic and trimming") {
    DensePoly a{Rat(1), Rat(2)};        // 1 + 2x
    DensePoly b{Rat(-1), Rat(-2)};      // -(1 + 2x)
    CHECK(add(a, b).is_zero());
    CHECK(add(a, b).degree() == -1);

    DensePoly c = mul(a, a);  // 1 + 4x + 4x^2
    CHECK(c == DensePoly({Rat(1), Rat(4), Rat(4)}));
    CHECK(c.eval_at(2) == Rat(25));

    DensePoly t{Rat(0), Rat(0), Rat(5)};
    CHECK(t.valuation() == 2);
    CHECK(shift_down(t, 2) == DensePoly::constant(Rat(5)));
    CHECK_THROWS_AS(shift_down(t, 3), NegativeValuation);

    CHECK(DensePoly({Rat(1), Rat(0), Rat(0)}).degree() == 0);
}

TEST_CASE("integer-node interpolation") {
    // (n+1)^2 through n = 0, 1, 2
    DensePoly p = interpolate_at_integers({Rat(1), Rat(4), Rat(9)});
    CHECK(p == DensePoly({Rat(1), Rat(2), Rat(1)}));

    // constant
    CHECK(interpolate_at_integers({Rat(7)}) == DensePoly::constant(Rat(7)));

    // rational data: n/2
    DensePoly h = interpolate_at_integers({Rat(0), Rat(1, 2), Rat(1)});
    CHECK(h == DensePoly({Rat(0), Rat(1, 2)}));

    // degree collapses when the data is low-degree
    DensePoly lin = interpolate_at_integers({Rat(3), Rat(5), Rat(7), Rat(9)});
    CHECK(lin.degree() == 1);
    CHECK(lin.eval_at(10) == Rat(23));
}
