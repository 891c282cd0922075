#ifndef HANKEL_ANALYZE_HPP
#define HANKEL_ANALYZE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankel/numbers.hpp"
#include "hankel/poly.hpp"

namespace hankel {

// Sign factor of a quasi-polynomial closed form: +-1 or +-(-1)^n.
enum class SignMode { Plus, Minus, AltPlus, AltMinus };

const char* sign_mode_str(SignMode s);
std::optional<SignMode> sign_mode_from_str(const std::string& s);
int sign_value(SignMode s, long n);

// One residue class of a determinant sequence: H_{qn+j} = sign(n) * poly(n).
struct ClosedForm {
    long q = 1;
    long j = 0;
    SignMode sign = SignMode::Plus;
    DensePoly poly;

    Rat eval(long n) const;
};

// Exact quasi-polynomial fit for the residue class j modulo q. Interpolates
// through the first deg_max+1 samples for each sign mode and accepts the
// lowest-degree candidate that reproduces every remaining sample. deg_max is
// clamped so that at least two held-out samples validate the fit. Returns
// nullopt (NoFit) when no candidate validates.
std::optional<ClosedForm> fit_quasi_poly(std::span<const Rat> values, long q, long j, long deg_max);

struct PeriodScan {
    long q = 0;
    std::vector<ClosedForm> forms;
};

struct PeriodScanOptions {
    long q_max = 64;
    long deg_max = 24;
    long min_periods = 5;
};

// Smallest q <= q_max such that every residue class admits a quasi-polynomial
// fit, requiring at least min_periods complete periods of data. Returns
// nullopt when no q qualifies.
std::optional<PeriodScan> detect_period(std::span<const Rat> values, PeriodScanOptions opts = {});

// Fit a per-n sign and a constant magnitude: xs[n] = sign(n) * c with c >= 0
// constant over n >= start. Zero sequences fit as (Plus, 0).
struct UnitFit {
    SignMode sign = SignMode::Plus;
    Rat magnitude;
    std::string str() const;
};
std::optional<UnitFit> fit_signed_constant(std::span<const Rat> xs, long start = 0);

std::vector<Rat> to_rat_vector(std::span<const Int> xs);

}  // namespace hankel

#endif
