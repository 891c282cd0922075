#include <doctest.h>

#include "hankel/errors.hpp"
#include "hankel/motzkin.hpp"

using namespace hankel;

namespace {

std::vector<long> longs(const std::vector<Int>& xs) {
    std::vector<long> v;
    for (const auto& x : xs) v.push_back(static_cast<long>(x.get_si()));
    return v;
}

}  // namespace

TEST_CASE("motzkin numbers") {
    CHECK(longs(motzkin_coeffs(1)) == std::vector<long>{1});
    CHECK(longs(motzkin_coeffs(7)) == std::vector<long>{1, 1, 2, 4, 9, 21, 51});
}

TEST_CASE("motzkin generating function satisfies its quadratic") {
    const std::size_t p = 30;
    std::vector<Int> m = motzkin_coeffs(p);
    std::vector<Rat> v(p);
    for (std::size_t i = 0; i < p; ++i) v[i] = Rat(m[i]);
    TruncatedSeries M{std::move(v)};
    // x^2 M^2 + x M + 1 - M = 0
    TruncatedSeries res = shift(mul(M, M), 2);
    res = add(truncate(res, p), shift(truncate(M, p - 1), 1));
    res = add(res, TruncatedSeries::constant(Rat(1), p));
    res = sub(res, M);
    CHECK(res.is_zero_to_precision());
}

TEST_CASE("convolution powers") {
    CHECK(longs(motzkin_power_ints(1, 7)) == std::vector<long>{1, 1, 2, 4, 9, 21, 51});
    CHECK(longs(motzkin_power_ints(2, 5)) == std::vector<long>{1, 2, 5, 12, 30});
    CHECK(longs(motzkin_power_ints(4, 4)) == std::vector<long>{1, 4, 14, 44});
}

TEST_CASE("powers multiply: M^r * M^s = M^(r+s)") {
    const std::size_t p = 25;
    for (unsigned r = 1; r <= 5; ++r) {
        for (unsigned s = r; r + s <= 10; ++s) {
            TruncatedSeries lhs = mul(motzkin_power(r, p), motzkin_power(s, p));
            TruncatedSeries rhs = motzkin_power(r + s, p);
            CHECK(equal_to_shared_precision(lhs, rhs));
        }
    }
}

TEST_CASE("power coefficients are positive integers") {
    for (unsigned r : {1u, 3u, 8u}) {
        std::vector<Int> c = motzkin_power_ints(r, 30);
        for (const Int& x : c) CHECK(x > 0);
    }
}

TEST_CASE("functional equation for M^3 matches the closed form") {
    QFE q = motzkin_power_qfe(3, 12);
    CHECK(q.d == 0);
    CHECK(q.k == 6);
    const std::vector<long> u_expect{1, -3, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(q.u.at(i) == Rat(u_expect[i]));
        CHECK(q.v.at(i) == (i == 0 ? Rat(-1) : Rat(0)));
    }
}

TEST_CASE("functional equation for M^4 matches the closed form") {
    QFE q = motzkin_power_qfe(4, 12);
    CHECK(q.d == 0);
    CHECK(q.k == 8);
    const std::vector<long> u_expect{1, -4, 2, 4, -1, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(q.u.at(i) == Rat(u_expect[i]));
        CHECK(q.v.at(i) == (i == 0 ? Rat(-1) : Rat(0)));
    }
}

TEST_CASE("M^r satisfies its derived equation for general r") {
    const std::size_t p = 24;
    for (unsigned r = 1; r <= 10; ++r) {
        QFE q = motzkin_power_qfe(r, p);
        CHECK(q.d == 0);
        CHECK(q.u.at(0) == 1);
        CHECK(q.k >= 1);
        CHECK(q.v.at(0) != 0);
        TruncatedSeries f = motzkin_power(r, p);
        TruncatedSeries res = qfe_residual(q, f);
        CHECK(res.is_zero_to_precision());
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(motzkin_coeffs(0), std::invalid_argument);
    CHECK_THROWS_AS(motzkin_power(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(motzkin_power_qfe(0, 5), std::invalid_argument);
}
