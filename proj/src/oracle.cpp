#include "hankel/oracle.hpp"

#include <cassert>
#include <string>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

void require_len(std::size_t have, std::size_t n) {
    if (n >= 1 && have < 2 * n - 1)
        throw InsufficientCoefficients("hankel_det: order " + std::to_string(n) + " needs " +
                                       std::to_string(2 * n - 1) + " coefficients, have " +
                                       std::to_string(have));
}

}  // namespace

Int bareiss_det(std::vector<Int> m, std::size_t n) {
    if (n == 0) return 1;
    assert(m.size() == n * n);
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
    int sign = 1;
    Int prev = 1;
    Int t1, t2;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;  // entire remaining column is zero
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // (m[i][j]*pivot - m[i][k]*m[k][j]) / prev is exact: the
                // numerator is prev times a minor of the pivoted matrix.
                mpz_mul(t1.get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
                mpz_mul(t2.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
#ifndef NDEBUG
                assert(mpz_divisible_p(t1.get_mpz_t(), prev.get_mpz_t()));
#endif
                mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

Int hankel_det(std::span<const Int> seq, std::size_t n) {
    if (n == 0) return 1;
    require_len(seq.size(), n);
    std::vector<Int> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = seq[i + j];
    return bareiss_det(std::move(m), n);
}

Rat hankel_det(std::span<const Rat> seq, std::size_t n) {
    if (n == 0) return Rat(1);
    require_len(seq.size(), n);
    Int den = 1;
    for (std::size_t i = 0; i < 2 * n - 1; ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(seq[i].get_mpq_t()));
    std::vector<Int> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = seq[i + j] * Rat(den);
            m[i * n + j] = to_integer(scaled);
        }
    Rat result(bareiss_det(std::move(m), n));
    result /= Rat(int_pow(den, static_cast<unsigned long>(n)));
    return result;
}

std::vector<Int> hankel_table(std::span<const Int> seq, std::size_t n_max) {
    if (n_max >= 1) require_len(seq.size(), n_max);
    std::vector<Int> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out[n] = hankel_det(seq, n);
    return out;
}

std::vector<Rat> hankel_table(std::span<const Rat> seq, std::size_t n_max) {
    if (n_max >= 1) require_len(seq.size(), n_max);
    std::vector<Rat> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out[n] = hankel_det(seq, n);
    return out;
}

}  // namespace hankel
