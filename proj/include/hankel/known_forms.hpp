#ifndef HANKEL_KNOWN_FORMS_HPP
#define HANKEL_KNOWN_FORMS_HPP

#include <vector>

#include "hankel/analyze.hpp"

namespace hankel {

// Known closed forms for the Hankel determinant sequences of M(x)^r,
// r = 2..7: period q and one quasi-polynomial per residue class. These are
// the reference values the verifier checks computed determinants against.
struct KnownFormTable {
    unsigned r = 0;
    long q = 1;
    std::vector<ClosedForm> forms;  // one entry per residue 0..q-1
};

bool has_known_forms(unsigned r);
const KnownFormTable& known_forms(unsigned r);

// Expected shifted period of H_n(M(x)^r): r when r = 0 mod 3, else 3r.
long expected_period(unsigned r);

// Largest polynomial degree appearing among the residue-class closed forms
// of H_n(M(x)^r) (measured; conservative upper bound for unmeasured r).
long fit_degree_budget(unsigned r);

// Table length giving every residue class enough samples to fit and validate
// its closed form: at least five periods, more where the degree requires it.
std::size_t period_scan_length(unsigned r);

}  // namespace hankel

#endif
