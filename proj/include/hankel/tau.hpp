#ifndef HANKEL_TAU_HPP
#define HANKEL_TAU_HPP

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "hankel/numbers.hpp"
#include "hankel/qfe.hpp"

namespace hankel {

// The quadratic transformation tau acts on a QFE-defined series in one of
// three ways, each with an explicit Hankel determinant relation:
//   Normalize  (u(0) != 1):        H_n(tau F) = u(0)^n H_n(F)
//   ShiftK1    (u(0) = 1, k = 1):  H_{n-d-1}(tau F) = (-1)^binom(d+1,2) H_n(F)
//   ShiftKGe2  (u(0) = 1, k >= 2): H_{n-d-1}(tau F) = (-1)^binom(d+1,2) H_n(F)
enum class TauCase { Normalize, ShiftK1, ShiftKGe2 };

const char* tau_case_name(TauCase c);

struct TauRelation {
    TauCase kind;
    long index_shift;  // 0 for Normalize, d+1 for the shift cases
    Rat scale;         // Normalize: u(0), meaning H_n(next) = scale^n * H_n(cur)
    int sign;          // shift cases: (-1)^binom(d+1,2); +1 for Normalize
};

TauCase classify(const QFE& q);

struct TauStep {
    QFE next;
    TauRelation relation;
};

// One application of tau. The shift cases split u = u_L + x^{d+2} u_H, build
// the transformed quadratic, and restore normal form; ShiftK1 additionally
// applies the x^{-1}(G - G(0)) shift. Throws InsufficientPrecision when the
// inputs cannot support the step.
TauStep tau_step(const QFE& q);

// One tau orbit, extended lazily; nodes[0] is the starting equation and
// relations[i] links nodes[i] to nodes[i+1].
struct TauChain {
    std::vector<QFE> nodes;
    std::vector<TauRelation> relations;
    bool exhausted = false;

    // Appends one step; returns false (and sets exhausted) when precision no
    // longer permits one.
    bool try_extend();
};

// Structural signature of a chain: (d, k, case) per step, used for period
// detection of the continued fraction.
using ChainFingerprint = std::vector<std::tuple<long, long, TauCase>>;
ChainFingerprint chain_fingerprint(const TauChain& chain);

// Eventual periodicity of a fingerprint: the smallest period s (in tau
// steps) whose repetition covers the observed window after a short head.
struct ChainPeriod {
    std::size_t head = 0;         // steps before the periodic part
    std::size_t steps = 0;        // tau steps per period
    std::size_t shift_steps = 0;  // shift-case steps per period
    long index_shift = 0;         // total Hankel index consumed per period
};
std::optional<ChainPeriod> detect_chain_period(const ChainFingerprint& fp,
                                               const std::vector<TauRelation>& rels);

struct TauEngineOptions {
    std::size_t initial_precision = 0;  // 0: use n_max + 12r + 16
    std::size_t max_precision = 1u << 15;
    unsigned max_attempts = 8;
};

// Hankel determinants H_0..H_N of M(x)^r by walking the tau chain: Normalize
// steps divide the accumulator by scale^m, shift steps apply the sign and
// drop the index by d+1, and the residual order is finished by a direct
// determinant of the current node's solution series. Results are exact
// integers (asserted). Working precision starts near N plus four expected
// periods and doubles on PrecisionExhausted.
class TauHankel {
public:
    TauHankel(unsigned r, TauEngineOptions opts = {});

    // Values H_0..H_n_max; memoized, chain shared across orders.
    std::vector<Int> table(std::size_t n_max);
    Int value(std::size_t n);

    const TauChain& chain() const { return chain_; }
    std::size_t working_precision() const { return precision_; }
    unsigned attempts_used() const { return attempts_; }

    // Releases the chain (values stay memoized).
    void drop_chain();

private:
    unsigned r_;
    TauEngineOptions opts_;
    std::size_t precision_ = 0;
    unsigned attempts_ = 0;
    TauChain chain_;
    std::vector<std::optional<Int>> memo_;

    void build_chain(std::size_t precision);
    Int walk(std::size_t n);
};

// One-shot convenience wrapper around TauHankel.
std::vector<Int> hankel_via_tau(unsigned r, std::size_t n_max, TauEngineOptions opts = {});

}  // namespace hankel

#endif
