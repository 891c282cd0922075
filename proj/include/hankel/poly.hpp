#ifndef HANKEL_POLY_HPP
#define HANKEL_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hankel/numbers.hpp"

namespace hankel {

// Dense univariate polynomial over the rationals, coefficients ascending,
// trailing zeros trimmed. The zero polynomial has an empty coefficient list
// and degree -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Rat> coeffs);
    DensePoly(std::initializer_list<Rat> coeffs);

    static DensePoly constant(const Rat& c);
    // c * x^m
    static DensePoly monomial(const Rat& c, std::size_t m);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Coefficient of x^i; zero beyond the stored range.
    Rat coeff(std::size_t i) const;

    Rat eval(const Rat& x) const;
    Rat eval_at(long n) const { return eval(Rat(n)); }

    // Smallest i with nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> valuation() const;

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

DensePoly add(const DensePoly& a, const DensePoly& b);
DensePoly sub(const DensePoly& a, const DensePoly& b);
DensePoly neg(const DensePoly& a);
DensePoly mul(const DensePoly& a, const DensePoly& b);
DensePoly scale(const DensePoly& a, const Rat& c);
// Multiply by x^m.
DensePoly shift_up(const DensePoly& a, std::size_t m);
// Divide by x^m; throws NegativeValuation unless valuation >= m.
DensePoly shift_down(const DensePoly& a, std::size_t m);

inline DensePoly operator+(const DensePoly& a, const DensePoly& b) { return add(a, b); }
inline DensePoly operator-(const DensePoly& a, const DensePoly& b) { return sub(a, b); }
inline DensePoly operator*(const DensePoly& a, const DensePoly& b) { return mul(a, b); }

// Unique polynomial of degree <= k through the points (0, ys[0]) .. (k, ys[k]),
// by Newton's divided differences over exact rationals.
DensePoly interpolate_at_integers(const std::vector<Rat>& ys);

}  // namespace hankel

#endif
