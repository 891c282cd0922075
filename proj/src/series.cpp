#include "hankel/series.hpp"

#include <algorithm>
#include <sstream>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

#ifndef NDEBUG
void audit_canonical(const std::vector<Rat>& v) {
    for (const auto& q : v) assert(is_canonical(q));
}
#else
void audit_canonical(const std::vector<Rat>&) {}
#endif

TruncatedSeries finish(std::vector<Rat> v) {
    audit_canonical(v);
    return TruncatedSeries(std::move(v));
}

}  // namespace

TruncatedSeries TruncatedSeries::zero(std::size_t precision) {
    return TruncatedSeries(std::vector<Rat>(precision, Rat(0)));
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, std::size_t precision) {
    std::vector<Rat> v(precision, Rat(0));
    if (precision > 0) v[0] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::monomial(const Rat& c, std::size_t m, std::size_t precision) {
    std::vector<Rat> v(precision, Rat(0));
    if (m < precision) v[m] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::from_poly(const DensePoly& p, std::size_t precision) {
    std::vector<Rat> v(precision, Rat(0));
    for (std::size_t i = 0; i < precision; ++i) v[i] = p.coeff(i);
    return TruncatedSeries(std::move(v));
}

const Rat& TruncatedSeries::at(std::size_t i) const {
    if (i >= coeffs_.size())
        throw InsufficientPrecision("series read at order " + std::to_string(i) +
                                    " beyond precision " + std::to_string(coeffs_.size()));
    return coeffs_[i];
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return std::nullopt;
}

std::string TruncatedSeries::str(std::size_t max_terms) const {
    std::ostringstream os;
    os << "[";
    const std::size_t n = std::min(max_terms, coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    if (n < coeffs_.size()) os << ", ...";
    os << "] + O(x^" << coeffs_.size() << ")";
    return os.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<Rat> v(p);
    for (std::size_t i = 0; i < p; ++i) v[i] = a.coeffs()[i] + b.coeffs()[i];
    return finish(std::move(v));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<Rat> v(p);
    for (std::size_t i = 0; i < p; ++i) v[i] = a.coeffs()[i] - b.coeffs()[i];
    return finish(std::move(v));
}

TruncatedSeries neg(const TruncatedSeries& a) {
    std::vector<Rat> v(a.coeffs());
    for (auto& x : v) x = -x;
    return finish(std::move(v));
}

TruncatedSeries scale(const TruncatedSeries& a, const Rat& c) {
    std::vector<Rat> v(a.coeffs());
    for (auto& x : v) x *= c;
    return finish(std::move(v));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<Rat> v(p, Rat(0));
    mpq_t t;
    mpq_init(t);
    for (std::size_t i = 0; i < p; ++i) {
        if (a.coeffs()[i] == 0) continue;
        const mpq_srcptr ai = a.coeffs()[i].get_mpq_t();
        for (std::size_t j = 0; i + j < p; ++j) {
            if (b.coeffs()[j] == 0) continue;
            mpq_mul(t, ai, b.coeffs()[j].get_mpq_t());
            mpq_add(v[i + j].get_mpq_t(), v[i + j].get_mpq_t(), t);
        }
    }
    mpq_clear(t);
    return finish(std::move(v));
}

TruncatedSeries mul_poly(const TruncatedSeries& a, const DensePoly& p) {
    const std::size_t n = a.precision();
    std::vector<Rat> v(n, Rat(0));
    mpq_t t;
    mpq_init(t);
    for (std::size_t i = 0; i < p.coeffs().size() && i < n; ++i) {
        if (p.coeffs()[i] == 0) continue;
        const mpq_srcptr pi = p.coeffs()[i].get_mpq_t();
        for (std::size_t j = 0; i + j < n; ++j) {
            if (a.coeffs()[j] == 0) continue;
            mpq_mul(t, pi, a.coeffs()[j].get_mpq_t());
            mpq_add(v[i + j].get_mpq_t(), v[i + j].get_mpq_t(), t);
        }
    }
    mpq_clear(t);
    return finish(std::move(v));
}

TruncatedSeries inv(const TruncatedSeries& a) {
    if (a.empty() || a.coeffs()[0] == 0)
        throw ZeroConstantTerm("series inverse requires a nonzero constant term");
    const std::size_t p = a.precision();
    std::vector<Rat> v(p, Rat(0));
    const Rat inv0 = 1 / a.coeffs()[0];
    v[0] = inv0;
    mpq_t t, acc;
    mpq_init(t);
    mpq_init(acc);
    for (std::size_t n = 1; n < p; ++n) {
        mpq_set_ui(acc, 0, 1);
        for (std::size_t j = 1; j <= n; ++j) {
            if (a.coeffs()[j] == 0 || v[n - j] == 0) continue;
            mpq_mul(t, a.coeffs()[j].get_mpq_t(), v[n - j].get_mpq_t());
            mpq_add(acc, acc, t);
        }
        mpq_neg(acc, acc);
        mpq_mul(v[n].get_mpq_t(), acc, inv0.get_mpq_t());
    }
    mpq_clear(t);
    mpq_clear(acc);
    return finish(std::move(v));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.empty() || b.coeffs()[0] == 0)
        throw ZeroConstantTerm("series division requires a unit divisor");
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<Rat> v(p, Rat(0));
    const Rat inv0 = 1 / b.coeffs()[0];
    mpq_t t, acc;
    mpq_init(t);
    mpq_init(acc);
    for (std::size_t n = 0; n < p; ++n) {
        mpq_set(acc, a.coeffs()[n].get_mpq_t());
        for (std::size_t j = 1; j <= n; ++j) {
            if (b.coeffs()[j] == 0 || v[n - j] == 0) continue;
            mpq_mul(t, b.coeffs()[j].get_mpq_t(), v[n - j].get_mpq_t());
            mpq_sub(acc, acc, t);
        }
        mpq_mul(v[n].get_mpq_t(), acc, inv0.get_mpq_t());
    }
    mpq_clear(t);
    mpq_clear(acc);
    return finish(std::move(v));
}

TruncatedSeries shift(const TruncatedSeries& a, long m) {
    if (m >= 0) {
        std::vector<Rat> v(a.precision() + static_cast<std::size_t>(m), Rat(0));
        for (std::size_t i = 0; i < a.precision(); ++i) v[i + static_cast<std::size_t>(m)] = a.coeffs()[i];
        return TruncatedSeries(std::move(v));
    }
    const std::size_t k = static_cast<std::size_t>(-m);
    if (a.precision() < k)
        throw InsufficientPrecision("shift: dividing by x^" + std::to_string(k) +
                                    " exceeds precision " + std::to_string(a.precision()));
    for (std::size_t i = 0; i < k; ++i)
        if (a.coeffs()[i] != 0)
            throw NegativeValuation("shift: division by x^" + std::to_string(k) +
                                    " leaves negative powers (valuation " + std::to_string(i) + ")");
    std::vector<Rat> v(a.coeffs().begin() + static_cast<long>(k), a.coeffs().end());
    return TruncatedSeries(std::move(v));
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t p) {
    if (p >= a.precision()) return a;
    std::vector<Rat> v(a.coeffs().begin(), a.coeffs().begin() + static_cast<long>(p));
    return TruncatedSeries(std::move(v));
}

SplitResult split(const TruncatedSeries& u, std::size_t d) {
    const std::size_t cut = d + 2;
    if (u.precision() < cut)
        throw InsufficientPrecision("split: need precision >= " + std::to_string(cut) +
                                    ", have " + std::to_string(u.precision()));
    std::vector<Rat> low(u.coeffs().begin(), u.coeffs().begin() + static_cast<long>(cut));
    std::vector<Rat> high(u.coeffs().begin() + static_cast<long>(cut), u.coeffs().end());
    return SplitResult{DensePoly(std::move(low)), TruncatedSeries(std::move(high))};
}

bool equal_to_shared_precision(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t p = std::min(a.precision(), b.precision());
    for (std::size_t i = 0; i < p; ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return false;
    return true;
}

}  // namespace hankel
