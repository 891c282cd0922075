#ifndef HANKEL_NUMBERS_HPP
#define HANKEL_NUMBERS_HPP

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <string>

namespace hankel {

// Exact arithmetic backbone. GMP supplies the integer/rational kernels;
// mpq_class keeps values canonical (positive denominator, lowest terms).
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;  // canonical since base is canonical
}

inline bool is_integer(const Rat& q) { return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0; }

inline Int to_integer(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("to_integer: value " + q.get_str() + " is not an integer");
    return q.get_num();
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// (-1)^(binom(m,2)) parity helper used by the index-shift determinant relations.
inline int neg_one_pow_choose2(long m) {
    long t = (m * (m - 1) / 2) % 2;
    return t == 0 ? 1 : -1;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical-form audit: gcd(|num|, den) == 1 and den > 0. Debug builds run
// this after every series operation.
inline bool is_canonical(const Rat& q) {
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
    return mpz_cmp_ui(g.get_mpz_t(), 1) == 0;
}

}  // namespace hankel

#endif
