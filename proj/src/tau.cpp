#include "hankel/tau.hpp"

#include <stdexcept>
#include <string>

#include "hankel/errors.hpp"
#include "hankel/motzkin.hpp"
#include "hankel/oracle.hpp"

namespace hankel {

const char* tau_case_name(TauCase c) {
    switch (c) {
        case TauCase::Normalize: return "normalize";
        case TauCase::ShiftK1: return "shift-k1";
        case TauCase::ShiftKGe2: return "shift";
    }
    return "?";
}

TauCase classify(const QFE& q) {
    if (q.u.at(0) != 1) return TauCase::Normalize;
    return q.k == 1 ? TauCase::ShiftK1 : TauCase::ShiftKGe2;
}

namespace {

TauStep step_normalize(const QFE& q) {
    const Rat c = q.u.at(0);
    QFE next(q.d, q.k, scale(q.u, 1 / c), scale(q.v, 1 / (c * c)));
    return TauStep{std::move(next), TauRelation{TauCase::Normalize, 0, c, +1}};
}

TauStep step_shift(const QFE& q, TauCase kind) {
    const std::size_t d = static_cast<std::size_t>(q.d);
    if (q.u.precision() < d + 3)
        throw InsufficientPrecision("tau_step: u needs precision >= d+3");
    SplitResult sp = split(q.u, d);
    // D0 = u_L - x^{d+2} u_H = u - 2 x^{d+2} u_H
    TruncatedSeries D0 = sub(q.u, scale(shift(sp.high, static_cast<long>(d) + 2), Rat(2)));

    TruncatedSeries N =
        kind == TauCase::ShiftK1
            ? sub(neg(q.v), shift(mul_poly(sp.high, sp.low), 1))
            : sub(neg(shift(q.v, q.k - 2)), mul_poly(sp.high, sp.low));
    if (N.empty())
        throw InsufficientPrecision("tau_step: transformed numerator has no known coefficients");

    const int sign = neg_one_pow_choose2(q.d + 1);
    TauRelation rel{kind, q.d + 1, Rat(1), sign};

    if (kind == TauCase::ShiftKGe2) {
        // G = N / (D0 - x^{d+2} G), i.e. -x^{d+2} G^2 + D0 G - N = 0.
        const std::size_t prec = std::max(N.precision(), D0.precision()) + d + 3;
        TruncatedSeries A = TruncatedSeries::monomial(Rat(-1), d + 2, prec);
        return TauStep{qfe_from_quadratic(A, D0, neg(N)), rel};
    }

    // k = 1: G = N / (D0 - x^{d+1} G) followed by tau(F) = (G - G(0))/x.
    // Substituting G = g0 + x T into -x^{d+1} G^2 + D0 G - N = 0 and dividing
    // by x gives -x^{d+2} T^2 + (D0 - 2 g0 x^{d+1}) T + (g0 D0 - g0^2 x^{d+1} - N)/x = 0.
    const Rat g0 = N.at(0) / D0.at(0);
    const std::size_t prec = std::max(N.precision(), D0.precision()) + d + 3;
    TruncatedSeries B = sub(D0, TruncatedSeries::monomial(2 * g0, d + 1, D0.precision()));
    TruncatedSeries C0 = sub(scale(D0, g0), N);
    C0 = sub(C0, TruncatedSeries::monomial(g0 * g0, d + 1, C0.precision()));
    // The constant term cancels exactly by the choice of g0.
    TruncatedSeries C = shift(C0, -1);
    TruncatedSeries A = TruncatedSeries::monomial(Rat(-1), d + 2, prec);
    return TauStep{qfe_from_quadratic(A, B, C), rel};
}

}  // namespace

TauStep tau_step(const QFE& q) {
    switch (classify(q)) {
        case TauCase::Normalize: return step_normalize(q);
        case TauCase::ShiftK1: return step_shift(q, TauCase::ShiftK1);
        case TauCase::ShiftKGe2: return step_shift(q, TauCase::ShiftKGe2);
    }
    throw std::logic_error("tau_step: unreachable");
}

bool TauChain::try_extend() {
    if (exhausted) return false;
    if (nodes.empty()) throw std::logic_error("TauChain: no starting node");
    try {
        TauStep s = tau_step(nodes.back());
        if (!relations.empty() && relations.back().kind == TauCase::Normalize &&
            s.relation.kind == TauCase::Normalize)
            throw std::logic_error("TauChain: two consecutive normalize steps");
        nodes.push_back(std::move(s.next));
        relations.push_back(s.relation);
        return true;
    } catch (const InsufficientPrecision&) {
        exhausted = true;
        return false;
    } catch (const DegenerateEquation&) {
        // A numerator that vanishes to working precision is indistinguishable
        // from an exactly degenerate one; stop the chain and let the caller
        // retry with more precision.
        exhausted = true;
        return false;
    }
}

ChainFingerprint chain_fingerprint(const TauChain& chain) {
    ChainFingerprint fp;
    fp.reserve(chain.relations.size());
    for (std::size_t i = 0; i < chain.relations.size(); ++i)
        fp.emplace_back(chain.nodes[i].d, chain.nodes[i].k, chain.relations[i].kind);
    return fp;
}

std::optional<ChainPeriod> detect_chain_period(const ChainFingerprint& fp,
                                               const std::vector<TauRelation>& rels) {
    const std::size_t L = fp.size();
    for (std::size_t s = 1; 3 * s <= L; ++s) {
        // Smallest head after which the tail is s-periodic.
        std::size_t head = L >= s ? L - s : 0;
        while (head > 0 && fp[head - 1] == fp[head - 1 + s]) --head;
        if (head + 3 * s > L || head > 2 * s) continue;
        ChainPeriod p;
        p.head = head;
        p.steps = s;
        for (std::size_t i = head; i < head + s; ++i) {
            if (std::get<2>(fp[i]) != TauCase::Normalize) {
                ++p.shift_steps;
                p.index_shift += rels[i].index_shift;
            }
        }
        return p;
    }
    return std::nullopt;
}

TauHankel::TauHankel(unsigned r, TauEngineOptions opts) : r_(r), opts_(opts) {
    if (r == 0) throw std::invalid_argument("TauHankel: r must be >= 1");
}

void TauHankel::build_chain(std::size_t precision) {
    precision_ = precision;
    chain_ = TauChain{};
    chain_.nodes.push_back(motzkin_power_qfe(r_, precision));
}

void TauHankel::drop_chain() { chain_ = TauChain{}; }

Int TauHankel::walk(std::size_t n) {
    Rat acc(1);
    std::size_t j = 0;
    long m = static_cast<long>(n);
    for (;;) {
        if (m == 0) return to_integer(acc);
        while (chain_.relations.size() <= j && chain_.try_extend()) {}
        const bool have_rel = chain_.relations.size() > j;
        const QFE& node = chain_.nodes[j];
        bool base_case = !have_rel;
        if (have_rel) {
            const TauRelation& rel = chain_.relations[j];
            if (rel.kind == TauCase::Normalize) {
                acc /= rat_pow(rel.scale, static_cast<unsigned long>(m));
                ++j;
                continue;
            }
            if (m >= rel.index_shift) {
                if (rel.sign < 0) acc = -acc;
                m -= rel.index_shift;
                ++j;
                continue;
            }
            base_case = true;  // index would drop below zero: finish directly
        }
        if (base_case) {
            const std::size_t need = 2 * static_cast<std::size_t>(m) - 1;
            if (need > node.solvable_precision())
                throw PrecisionExhausted("tau walk: node cannot supply " + std::to_string(need) +
                                             " coefficients for the base determinant",
                                         static_cast<long>(n));
            TruncatedSeries f = qfe_solve(node, need);
            Rat det = hankel_det(std::span<const Rat>(f.coeffs()), static_cast<std::size_t>(m));
            return to_integer(acc * det);
        }
    }
}

Int TauHankel::value(std::size_t n) {
    if (n < memo_.size() && memo_[n]) return *memo_[n];
    if (memo_.size() <= n) memo_.resize(n + 1);
    if (chain_.nodes.empty()) {
        const std::size_t start = opts_.initial_precision
                                      ? opts_.initial_precision
                                      : n + 12 * static_cast<std::size_t>(r_) + 16;
        build_chain(start);
        attempts_ = 1;
    }
    for (;;) {
        try {
            Int h = walk(n);
            memo_[n] = h;
            return h;
        } catch (const PrecisionExhausted&) {
            if (attempts_ >= opts_.max_attempts || precision_ * 2 > opts_.max_precision)
                throw PrecisionExhausted("tau walk: precision cap reached at order " +
                                             std::to_string(n) + " (precision " +
                                             std::to_string(precision_) + ")",
                                         static_cast<long>(n));
            ++attempts_;
            build_chain(precision_ * 2);
        }
    }
}

std::vector<Int> TauHankel::table(std::size_t n_max) {
    if (chain_.nodes.empty() && !(n_max < memo_.size() && memo_[n_max])) {
        const std::size_t start = opts_.initial_precision
                                      ? opts_.initial_precision
                                      : n_max + 12 * static_cast<std::size_t>(r_) + 16;
        build_chain(start);
        attempts_ = 1;
    }
    std::vector<Int> out(n_max + 1);
    // Deepest order first: it drives chain extension and precision retries.
    out[n_max] = value(n_max);
    for (std::size_t n = 0; n < n_max; ++n) out[n] = value(n);
    return out;
}

std::vector<Int> hankel_via_tau(unsigned r, std::size_t n_max, TauEngineOptions opts) {
    TauHankel engine(r, opts);
    return engine.table(n_max);
}

}  // namespace hankel
