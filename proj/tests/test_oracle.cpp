#include <doctest.h>

#include <random>

#include "hankel/errors.hpp"
#include "hankel/motzkin.hpp"
#include "hankel/oracle.hpp"

using namespace hankel;

namespace {

// Slow independent determinant: cofactor expansion along the first row.
Int cofactor_det(const std::vector<Int>& m, std::size_t n) {
    if (n == 0) return 1;
    if (n == 1) return m[0];
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[j] == 0) continue;
        std::vector<Int> minor((n - 1) * (n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[(i - 1) * (n - 1) + cc++] = m[i * n + c];
            }
        }
        Int term = m[j] * cofactor_det(minor, n - 1);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("hankel determinant basics") {
    std::vector<Int> any = ints({5, 7, 11});
    CHECK(hankel_det(std::span<const Int>(any), 0) == 1);

    std::vector<Int> m4 = motzkin_power_ints(4, 3);
    CHECK(hankel_det(std::span<const Int>(m4), 2) == -2);  // det [[1,4],[4,14]]

    std::vector<Int> m1 = motzkin_power_ints(1, 11);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(hankel_det(std::span<const Int>(m1), n) == 1);
}

TEST_CASE("hankel table for M^2 shows the signed period-12 pattern") {
    std::vector<Int> m2 = motzkin_power_ints(2, 23);
    std::vector<Int> table = hankel_table(std::span<const Int>(m2), 12);
    CHECK(table == ints({1, 1, 1, 1, 0, 0, -1, -1, -1, -1, 0, 0, 1}));
}

TEST_CASE("zero sequence and insufficient data") {
    std::vector<Int> zeros = ints({0, 0, 0});
    CHECK(hankel_table(std::span<const Int>(zeros), 2) == ints({1, 0, 0}));
    std::vector<Int> shorty = ints({1, 2});
    CHECK_THROWS_AS(hankel_det(std::span<const Int>(shorty), 2), InsufficientCoefficients);
}

TEST_CASE("rational sequences clear denominators and divide back") {
    std::vector<Rat> seq{Rat(1, 2), Rat(1, 3), Rat(1, 4)};
    CHECK(hankel_det(std::span<const Rat>(seq), 2) == Rat(1, 72));
    std::vector<Rat> ints_as_rats{Rat(1), Rat(4), Rat(14)};
    CHECK(hankel_det(std::span<const Rat>(ints_as_rats), 2) == Rat(-2));
}

TEST_CASE("bareiss equals cofactor expansion on random matrices") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = size(rng);
        std::vector<Int> m(n * n);
        for (auto& x : m) x = entry(rng);
        CHECK(bareiss_det(m, n) == cofactor_det(m, n));
    }
}

TEST_CASE("bareiss handles zero pivots via row search") {
    // det [[0,1],[1,0]] = -1
    std::vector<Int> m = ints({0, 1, 1, 0});
    CHECK(bareiss_det(m, 2) == -1);
    // genuinely singular
    std::vector<Int> s = ints({1, 2, 2, 4});
    CHECK(bareiss_det(s, 2) == 0);
    // leading zero column
    std::vector<Int> z = ints({0, 0, 0, 5});
    CHECK(bareiss_det(z, 2) == 0);
}

TEST_CASE("hankel matrix symmetry smoke test") {
    std::vector<Int> seq = motzkin_power_ints(3, 9);
    const std::size_t n = 5;
    std::vector<Int> m(n * n), mt(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i * n + j] = seq[i + j];
            mt[j * n + i] = seq[i + j];
        }
    CHECK(bareiss_det(m, n) == bareiss_det(mt, n));
    CHECK(m == mt);
}
