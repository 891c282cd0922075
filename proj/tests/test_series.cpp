#include <doctest.h>

#include <random>

#include "hankel/errors.hpp"
#include "hankel/series.hpp"

using namespace hankel;

namespace {

TruncatedSeries make(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return TruncatedSeries(std::move(v));
}

std::vector<long> longs(const TruncatedSeries& s) {
    std::vector<long> v;
    for (const auto& c : s.coeffs()) {
        REQUIRE(is_integer(c));
        v.push_back(static_cast<long>(to_integer(c).get_si()));
    }
    return v;
}

}  // namespace

TEST_CASE("series add/mul basics") {
    // (1+x)(1-x) = 1 - x^2
    TruncatedSeries a = make({1, 1, 0});
    TruncatedSeries b = make({1, -1, 0});
    CHECK(longs(mul(a, b)) == std::vector<long>{1, 0, -1});

    // Motzkin squared by direct convolution of 1,1,2,4,9
    TruncatedSeries m = make({1, 1, 2, 4, 9});
    CHECK(longs(mul(m, m)) == std::vector<long>{1, 2, 5, 12, 30});

    // s + (-s) vanishes at the shared precision
    TruncatedSeries s = make({3, -7, 2, 5});
    TruncatedSeries z = add(s, neg(s));
    CHECK(z.precision() == 4);
    CHECK(z.is_zero_to_precision());
}

TEST_CASE("series mul precision is the minimum of the operands") {
    TruncatedSeries a = make({1, 2, 3, 4, 5});
    TruncatedSeries b = make({1, 1});
    CHECK(mul(a, b).precision() == 2);
    CHECK(add(a, b).precision() == 2);
}

TEST_CASE("series inverse") {
    CHECK(longs(inv(make({1, -1, 0, 0}))) == std::vector<long>{1, 1, 1, 1});

    // 1/(1-3x+2x^3): c_n = 3 c_{n-1} - 2 c_{n-3}
    std::vector<long> expect{1};
    for (int n = 1; n < 4; ++n) {
        long c = 3 * expect[n - 1] - (n >= 3 ? 2 * expect[n - 3] : 0);
        expect.push_back(c);
    }
    CHECK(expect == std::vector<long>{1, 3, 9, 25});
    CHECK(longs(inv(make({1, -3, 0, 2}))) == expect);

    CHECK_THROWS_AS(inv(make({0, 1, 1})), ZeroConstantTerm);
}

TEST_CASE("series shift") {
    CHECK(longs(shift(make({0, 0, 1, 5}), -2)) == std::vector<long>{1, 5});
    CHECK(longs(shift(make({1, 2}), 2)) == std::vector<long>{0, 0, 1, 2});
    CHECK(shift(make({1, 2}), 2).precision() == 4);
    CHECK_THROWS_AS(shift(make({1, 2}), -1), NegativeValuation);
}

TEST_CASE("series split and recomposition") {
    TruncatedSeries u = make({1, -3, 0, 2, 0, 0});
    SplitResult sp = split(u, 0);
    CHECK(sp.low == DensePoly({Rat(1), Rat(-3)}));
    CHECK(longs(sp.high) == std::vector<long>{0, 2, 0, 0});

    TruncatedSeries one = TruncatedSeries::constant(Rat(1), 6);
    SplitResult sp2 = split(one, 3);
    CHECK(sp2.low == DensePoly::constant(Rat(1)));
    CHECK(sp2.high.is_zero_to_precision());

    // precision d+1 is one short of the required d+2
    CHECK_THROWS_AS(split(make({1, 2, 3}), 2), InsufficientPrecision);
}

TEST_CASE("split round trip on random series") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t p = 8 + trial % 5;
        std::vector<Rat> v(p);
        for (auto& c : v) {
            c = Rat(coeff(rng), den(rng));
            c.canonicalize();
        }
        TruncatedSeries u{std::move(v)};
        const std::size_t d = trial % 6;
        SplitResult sp = split(u, d);
        TruncatedSeries back = add(TruncatedSeries::from_poly(sp.low, u.precision()),
                                   shift(sp.high, static_cast<long>(d) + 2));
        CHECK(equal_to_shared_precision(back, u));
        CHECK(back.precision() == u.precision());
        CHECK(sp.low.degree() <= static_cast<long>(d) + 1);
    }
}

TEST_CASE("inverse is two-sided to precision on random unit series") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<long> unit(1, 7);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t p = 6;
        std::vector<Rat> v(p);
        v[0] = Rat(unit(rng), unit(rng));
        v[0].canonicalize();
        for (std::size_t i = 1; i < p; ++i) {
            v[i] = Rat(coeff(rng), unit(rng));
            v[i].canonicalize();
        }
        TruncatedSeries a{std::move(v)};
        TruncatedSeries b = inv(a);
        TruncatedSeries left = mul(a, b);
        TruncatedSeries right = mul(b, a);
        TruncatedSeries one = TruncatedSeries::constant(Rat(1), p);
        CHECK(equal_to_shared_precision(left, one));
        CHECK(equal_to_shared_precision(right, one));
    }
}

TEST_CASE("results stay canonical") {
    TruncatedSeries a = make({2, 4, 6});
    TruncatedSeries b = scale(a, Rat(1, 2));
    for (const auto& c : b.coeffs()) CHECK(is_canonical(c));
    TruncatedSeries q = div(make({1, 1, 1}), make({2, 0, 0}));
    for (const auto& c : q.coeffs()) CHECK(is_canonical(c));
    CHECK(q.at(0) == Rat(1, 2));
}

TEST_CASE("reads past precision are hard errors") {
    TruncatedSeries a = make({1, 2});
    CHECK(a.at(1) == Rat(2));
    CHECK_THROWS_AS(a.at(2), InsufficientPrecision);
    CHECK_THROWS_AS(TruncatedSeries{}.at(0), InsufficientPrecision);
}
