#include "hankel/poly.hpp"

#include <sstream>

#include "hankel/errors.hpp"

namespace hankel {

DensePoly::DensePoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly::DensePoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

DensePoly DensePoly::constant(const Rat& c) { return DensePoly{std::vector<Rat>{c}}; }

DensePoly DensePoly::monomial(const Rat& c, std::size_t m) {
    std::vector<Rat> v(m + 1, Rat(0));
    v[m] = c;
    return DensePoly{std::move(v)};
}

void DensePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat DensePoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

Rat DensePoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::optional<std::size_t> DensePoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return std::nullopt;
}

std::string DensePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

DensePoly add(const DensePoly& a, const DensePoly& b) {
    std::vector<Rat> v(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return DensePoly{std::move(v)};
}

DensePoly sub(const DensePoly& a, const DensePoly& b) {
    std::vector<Rat> v(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return DensePoly{std::move(v)};
}

DensePoly neg(const DensePoly& a) { return scale(a, Rat(-1)); }

DensePoly mul(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly{};
    std::vector<Rat> v(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return DensePoly{std::move(v)};
}

DensePoly scale(const DensePoly& a, const Rat& c) {
    if (c == 0) return DensePoly{};
    std::vector<Rat> v(a.coeffs());
    for (auto& x : v) x *= c;
    return DensePoly{std::move(v)};
}

DensePoly shift_up(const DensePoly& a, std::size_t m) {
    if (a.is_zero()) return a;
    std::vector<Rat> v(a.coeffs().size() + m, Rat(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i + m] = a.coeffs()[i];
    return DensePoly{std::move(v)};
}

DensePoly shift_down(const DensePoly& a, std::size_t m) {
    if (a.is_zero()) return a;
    auto val = a.valuation();
    if (!val || *val < m)
        throw NegativeValuation("shift_down: polynomial not divisible by x^" + std::to_string(m));
    std::vector<Rat> v(a.coeffs().begin() + static_cast<long>(m), a.coeffs().end());
    return DensePoly{std::move(v)};
}

DensePoly interpolate_at_integers(const std::vector<Rat>& ys) {
    if (ys.empty()) return DensePoly{};
    // Divided differences at nodes 0, 1, ..., k.
    std::vector<Rat> dd(ys);
    const std::size_t k = ys.size();
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(level));
    // Horner expansion of the Newton form: p = dd[k-1]; p = p*(x-i) + dd[i].
    DensePoly p = DensePoly::constant(dd[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;) {
        DensePoly x_minus_i{Rat(-static_cast<long>(i)), Rat(1)};
        p = mul(p, x_minus_i);
        p = add(p, DensePoly::constant(dd[i]));
    }
    return p;
}

}  // namespace hankel
