#ifndef HANKEL_ERRORS_HPP
#define HANKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hankel {

// Contract violations are thrown, never silently absorbed: a truncated-series
// read past its precision or a division by a non-unit must stop the pipeline.

struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct NegativeValuation : std::domain_error {
    explicit NegativeValuation(const std::string& what) : std::domain_error(what) {}
};

struct InsufficientPrecision : std::runtime_error {
    explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientCoefficients : std::invalid_argument {
    explicit InsufficientCoefficients(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateEquation : std::domain_error {
    explicit DegenerateEquation(const std::string& what) : std::domain_error(what) {}
};

struct NonUnitNumerator : std::domain_error {
    explicit NonUnitNumerator(const std::string& what) : std::domain_error(what) {}
};

// Raised by the determinant walk when the working precision of a chain cannot
// support the requested order; callers retry with a doubled precision budget.
struct PrecisionExhausted : std::runtime_error {
    long order_reached;
    explicit PrecisionExhausted(const std::string& what, long order = -1)
        : std::runtime_error(what), order_reached(order) {}
};

}  // namespace hankel

#endif
