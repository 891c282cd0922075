#include "hankel/analyze.hpp"

#include <algorithm>

namespace hankel {

const char* sign_mode_str(SignMode s) {
    switch (s) {
        case SignMode::Plus: return "+1";
        case SignMode::Minus: return "-1";
        case SignMode::AltPlus: return "(-1)^n";
        case SignMode::AltMinus: return "-(-1)^n";
    }
    return "?";
}

std::optional<SignMode> sign_mode_from_str(const std::string& s) {
    if (s == "+1") return SignMode::Plus;
    if (s == "-1") return SignMode::Minus;
    if (s == "(-1)^n") return SignMode::AltPlus;
    if (s == "-(-1)^n") return SignMode::AltMinus;
    return std::nullopt;
}

int sign_value(SignMode s, long n) {
    const int alt = (n % 2 == 0) ? 1 : -1;
    switch (s) {
        case SignMode::Plus: return 1;
        case SignMode::Minus: return -1;
        case SignMode::AltPlus: return alt;
        case SignMode::AltMinus: return -alt;
    }
    return 1;
}

Rat ClosedForm::eval(long n) const { return Rat(sign_value(sign, n)) * poly.eval_at(n); }

namespace {

constexpr SignMode kModes[4] = {SignMode::Plus, SignMode::Minus, SignMode::AltPlus,
                                SignMode::AltMinus};

}  // namespace

std::optional<ClosedForm> fit_quasi_poly(std::span<const Rat> values, long q, long j, long deg_max) {
    std::vector<Rat> samples;
    for (std::size_t i = static_cast<std::size_t>(j); i < values.size(); i += static_cast<std::size_t>(q))
        samples.push_back(values[i]);
    const long s = static_cast<long>(samples.size());
    if (s < 3) return std::nullopt;
    if (std::all_of(samples.begin(), samples.end(), [](const Rat& x) { return x == 0; }))
        return ClosedForm{q, j, SignMode::Plus, DensePoly{}};
    const long dm = std::min(deg_max, s - 3);
    if (dm < 0) return std::nullopt;

    std::optional<ClosedForm> best;
    long best_deg = 0;
    for (SignMode mode : kModes) {
        std::vector<Rat> t(samples.size());
        for (std::size_t m = 0; m < samples.size(); ++m)
            t[m] = samples[m] * sign_value(mode, static_cast<long>(m));
        std::vector<Rat> fit_pts(t.begin(), t.begin() + dm + 1);
        DensePoly p = interpolate_at_integers(fit_pts);
        bool ok = true;
        for (long m = dm + 1; m < s && ok; ++m) ok = (p.eval_at(m) == t[static_cast<std::size_t>(m)]);
        if (!ok) continue;
        if (!best || p.degree() < best_deg) {
            best_deg = p.degree();
            best = ClosedForm{q, j, mode, std::move(p)};
        }
    }
    return best;
}

std::optional<PeriodScan> detect_period(std::span<const Rat> values, PeriodScanOptions opts) {
    const long len = static_cast<long>(values.size());
    for (long q = 1; q <= opts.q_max; ++q) {
        if (len / q < opts.min_periods) break;  // longer periods have even less data
        PeriodScan scan;
        scan.q = q;
        bool ok = true;
        for (long j = 0; j < q && ok; ++j) {
            auto form = fit_quasi_poly(values, q, j, opts.deg_max);
            if (!form)
                ok = false;
            else
                scan.forms.push_back(std::move(*form));
        }
        if (ok) return scan;
    }
    return std::nullopt;
}

std::string UnitFit::str() const {
    if (magnitude == 0) return "0";
    std::string mag = magnitude.get_str();
    switch (sign) {
        case SignMode::Plus: return mag;
        case SignMode::Minus: return "-" + mag;
        case SignMode::AltPlus: return magnitude == 1 ? "(-1)^n" : "(-1)^n*" + mag;
        case SignMode::AltMinus: return magnitude == 1 ? "(-1)^(n+1)" : "(-1)^(n+1)*" + mag;
    }
    return mag;
}

std::optional<UnitFit> fit_signed_constant(std::span<const Rat> xs, long start) {
    if (static_cast<std::size_t>(start) >= xs.size()) return std::nullopt;
    if (std::all_of(xs.begin() + start, xs.end(), [](const Rat& x) { return x == 0; }))
        return UnitFit{SignMode::Plus, Rat(0)};
    for (SignMode mode : kModes) {
        Rat c;
        bool ok = true;
        bool first = true;
        for (std::size_t n = static_cast<std::size_t>(start); n < xs.size() && ok; ++n) {
            Rat t = xs[n] * sign_value(mode, static_cast<long>(n));
            if (first) {
                c = t;
                first = false;
                ok = (c > 0);
            } else {
                ok = (t == c);
            }
        }
        if (ok) return UnitFit{mode, c};
    }
    return std::nullopt;
}

std::vector<Rat> to_rat_vector(std::span<const Int> xs) {
    std::vector<Rat> out;
    out.reserve(xs.size());
    for (const Int& x : xs) out.emplace_back(x);
    return out;
}

}  // namespace hankel
