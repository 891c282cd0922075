#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hankel/analyze.hpp"
#include "hankel/errors.hpp"
#include "hankel/known_forms.hpp"
#include "hankel/motzkin.hpp"
#include "hankel/oracle.hpp"
#include "hankel/parallel.hpp"
#include "hankel/report.hpp"
#include "hankel/tau.hpp"
#include "hankel/verify.hpp"
#include "hankel/version.hpp"

namespace {

using namespace hankel;

// Process exit codes: 0 success/verified, 2 usage, 3 verification failure,
// 4 tau/oracle mismatch, 5 precision exhaustion, 1 other errors.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitPrecision = 5;

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string format = "txt";
    std::string out_path;
    unsigned jobs = 1;
    std::string cache_dir;
    std::size_t precision = 0;  // 0 = adaptive default
    long seed = 0;              // reserved for randomized self-checks
};

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty())
        std::cout << text;
    else
        write_text_file(opts.out_path, text);
}

TauEngineOptions engine_options(const CommonOpts& opts) {
    TauEngineOptions eo;
    eo.initial_precision = opts.precision;
    return eo;
}

std::vector<Int> tau_table_cached(unsigned r, std::size_t n_max, const CommonOpts& opts,
                                  std::size_t* precision_used = nullptr) {
    std::optional<TableCache> cache;
    if (!opts.cache_dir.empty()) cache.emplace(opts.cache_dir);
    if (cache) {
        if (auto hit = cache->load(r, "tau", n_max + 1)) {
            if (precision_used) *precision_used = hit->precision;
            hit->values.resize(n_max + 1);
            return hit->values;
        }
    }
    TauHankel engine(r, engine_options(opts));
    std::vector<Int> values = engine.table(n_max);
    if (precision_used) *precision_used = engine.working_precision();
    if (cache)
        cache->store(DeterminantTable{kToolVersion, r, "tau", engine.working_precision(), values});
    return values;
}

std::vector<Int> oracle_table_cached(unsigned r, std::size_t n_max, const CommonOpts& opts) {
    std::optional<TableCache> cache;
    if (!opts.cache_dir.empty()) cache.emplace(opts.cache_dir);
    if (cache) {
        if (auto hit = cache->load(r, "oracle", n_max + 1)) {
            hit->values.resize(n_max + 1);
            return hit->values;
        }
    }
    const std::size_t need = n_max == 0 ? 1 : 2 * n_max - 1;
    std::vector<Int> coeffs = motzkin_power_ints(r, need);
    std::vector<Int> values = hankel_table(std::span<const Int>(coeffs), n_max);
    if (cache) cache->store(DeterminantTable{kToolVersion, r, "oracle", need, values});
    return values;
}

std::string render_table(const DeterminantTable& t, const std::string& format) {
    if (format == "json") return to_json(t).dump(2) + "\n";
    if (format == "csv") return render_csv(t);
    if (format == "md") return render_markdown(t);
    std::ostringstream os;
    for (std::size_t n = 0; n < t.values.size(); ++n)
        os << n << "\t" << t.values[n].get_str() << "\n";
    return os.str();
}

std::string render_reports(const std::vector<RunReport>& reports, const std::string& format) {
    if (format == "md") {
        std::string out;
        for (const auto& rep : reports) out += render_markdown(rep) + "\n";
        return out;
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "r,n,h\n";
        for (const auto& rep : reports)
            for (std::size_t n = 0; n < rep.values.size(); ++n)
                os << rep.r << "," << n << "," << rep.values[n].get_str() << "\n";
        return os.str();
    }
    Json arr = Json::array();
    for (const auto& rep : reports) arr.push_back(to_json(rep));
    return arr.dump(2) + "\n";
}

int cmd_motzkin(unsigned r, std::size_t terms, const CommonOpts& opts) {
    TruncatedSeries s = motzkin_power(r, terms);
    if (opts.format == "txt") {
        std::ostringstream os;
        for (std::size_t i = 0; i < terms; ++i) {
            if (i) os << " ";
            os << to_integer(s.at(i)).get_str();
        }
        os << "\n";
        emit(opts, os.str());
        return kExitOk;
    }
    DeterminantTable t;  // reuse the table shape: n -> coefficient
    t.tool_version = kToolVersion;
    t.r = r;
    t.method = "coefficients";
    t.precision = terms;
    for (std::size_t i = 0; i < terms; ++i) t.values.push_back(to_integer(s.at(i)));
    emit(opts, render_table(t, opts.format));
    return kExitOk;
}

int cmd_det(unsigned r, std::size_t n_max, const std::string& method, const CommonOpts& opts) {
    constexpr std::size_t kOracleWarnThreshold = 150;
    if (method != "tau" && n_max > kOracleWarnThreshold)
        std::fprintf(stderr,
                     "warning: direct determinants up to order %zu involve dense elimination; "
                     "expect this to take a while\n",
                     n_max);
    DeterminantTable t;
    t.tool_version = kToolVersion;
    t.r = r;
    t.method = method;
    if (method == "tau") {
        t.values = tau_table_cached(r, n_max, opts, &t.precision);
    } else if (method == "oracle") {
        t.values = oracle_table_cached(r, n_max, opts);
        t.precision = n_max == 0 ? 1 : 2 * n_max - 1;
    } else {
        std::size_t prec = 0;
        std::vector<Int> tau_values = tau_table_cached(r, n_max, opts, &prec);
        std::vector<Int> oracle_values = oracle_table_cached(r, n_max, opts);
        for (std::size_t n = 0; n <= n_max; ++n)
            if (tau_values[n] != oracle_values[n])
                throw MismatchError("method disagreement at r=" + std::to_string(r) +
                                    ", n=" + std::to_string(n) + ": tau " + tau_values[n].get_str() +
                                    " vs oracle " + oracle_values[n].get_str());
        t.values = std::move(tau_values);
        t.precision = prec;
    }
    emit(opts, render_table(t, opts.format));
    return kExitOk;
}

int cmd_fit(unsigned r, std::size_t n_max, long period, long deg_max, const CommonOpts& opts) {
    RunReport rep;
    rep.r = r;
    rep.values = tau_table_cached(r, n_max, opts);
    std::vector<Rat> values = to_rat_vector(rep.values);
    if (period > 0) {
        for (long j = 0; j < period; ++j) {
            auto form = fit_quasi_poly(values, period, j, deg_max);
            if (form) rep.closed_forms.push_back(std::move(*form));
        }
        if (rep.closed_forms.size() == static_cast<std::size_t>(period)) rep.period = period;
    } else {
        PeriodScanOptions po;
        po.deg_max = deg_max;
        auto scan = detect_period(values, po);
        if (scan) {
            rep.period = scan->q;
            rep.closed_forms = std::move(scan->forms);
        }
    }
    emit(opts, render_reports({rep}, opts.format == "txt" ? "json" : opts.format));
    return kExitOk;
}

struct VerifyPlan {
    bool theorems = false;
    bool conjectures = false;
    bool families = false;
};

int cmd_verify(const VerifyPlan& plan, unsigned r_max, std::size_t n_max_override, long p_max,
               long k_max, const CommonOpts& opts) {
    std::map<unsigned, RunReport> by_r;
    std::vector<std::string> lines;

    auto theorem_n_max = [&](unsigned r) -> std::size_t {
        if (n_max_override) return n_max_override;
        switch (r) {
            case 2: return 120;
            case 3: return 362;  // closed-form argument up to 120 in every class
            case 4: return 240;
            case 5: return 75;
            case 6: return 60;
            case 7: return 105;
            default: return 60;
        }
    };

    if (plan.theorems) {
        std::vector<unsigned> rs{2, 3, 4, 5, 6, 7};
        std::vector<std::vector<Int>> tables(rs.size());
        parallel_for(rs.size(), opts.jobs, [&](std::size_t i) {
            tables[i] = tau_table_cached(rs[i], theorem_n_max(rs[i]), opts);
        });
        for (std::size_t i = 0; i < rs.size(); ++i) {
            RunReport& rep = by_r[rs[i]];
            rep.r = rs[i];
            if (rep.values.size() < tables[i].size()) rep.values = tables[i];
            rep.verification.push_back(verify_closed_forms(rs[i], tables[i]));
        }
    }
    if (plan.conjectures) {
        std::vector<unsigned> rs;
        for (unsigned r = 2; r <= r_max; ++r) rs.push_back(r);
        std::vector<std::vector<Int>> tables(rs.size());
        std::vector<std::optional<ChainPeriod>> chains(rs.size());
        parallel_for(rs.size(), opts.jobs, [&](std::size_t i) {
            const unsigned r = rs[i];
            const std::size_t n_max = n_max_override ? n_max_override : period_scan_length(r);
            TauHankel engine(r, engine_options(opts));
            tables[i] = engine.table(n_max);
            chains[i] = detect_chain_period(chain_fingerprint(engine.chain()),
                                            engine.chain().relations);
        });
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const unsigned r = rs[i];
            RunReport& rep = by_r[r];
            rep.r = r;
            if (rep.values.size() < tables[i].size()) rep.values = tables[i];
            for (auto& t : verify_conjectures(r, tables[i])) rep.verification.push_back(std::move(t));
            rep.verification.push_back(
                verify_period(r, tables[i], chains[i], fit_degree_budget(r)));
        }
    }
    if (plan.families) {
        FamilyOptions fo;
        fo.p_max = p_max;
        fo.k_max = k_max;
        for (unsigned r : {3u, 4u}) {
            RunReport& rep = by_r[r];
            rep.r = r;
            for (auto& t : verify_family(r, fo)) rep.verification.push_back(std::move(t));
        }
    }

    std::vector<RunReport> reports;
    bool all_ok = true;
    for (auto& [r, rep] : by_r) {
        for (const auto& t : rep.verification) {
            all_ok = all_ok && t.verified();
            std::string line = std::string(t.verified() ? "PASS" : "FAIL") + " " + t.target;
            for (const auto& note : t.notes) line += " [" + note + "]";
            lines.push_back(std::move(line));
        }
        reports.push_back(std::move(rep));
    }
    for (const auto& line : lines) std::cout << line << "\n";
    if (!opts.out_path.empty() || opts.format != "txt")
        emit(opts, render_reports(reports, opts.format == "txt" ? "json" : opts.format));
    return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_scan(unsigned r_lo, unsigned r_hi, std::size_t n_max_override, const CommonOpts& opts) {
    std::vector<unsigned> rs;
    for (unsigned r = r_lo; r <= r_hi; ++r) rs.push_back(r);
    std::vector<RunReport> reports(rs.size());
    parallel_for(rs.size(), opts.jobs, [&](std::size_t i) {
        const unsigned r = rs[i];
        const std::size_t n_max = n_max_override ? n_max_override : period_scan_length(r);
        RunReport rep;
        rep.r = r;
        TauHankel engine(r, engine_options(opts));
        rep.values = engine.table(n_max);
        auto chain = detect_chain_period(chain_fingerprint(engine.chain()), engine.chain().relations);
        engine.drop_chain();
        std::vector<Rat> values = to_rat_vector(rep.values);
        PeriodScanOptions po;
        po.deg_max = fit_degree_budget(r);
        if (auto scan = detect_period(values, po)) {
            rep.period = scan->q;
            rep.closed_forms = std::move(scan->forms);
        }
        if (r >= 2) {
            for (auto& t : verify_conjectures(r, rep.values)) rep.verification.push_back(std::move(t));
            rep.verification.push_back(verify_period(r, rep.values, chain, fit_degree_budget(r)));
        }
        reports[i] = std::move(rep);
    });
    bool incomplete = false;
    for (const auto& rep : reports)
        for (const auto& t : rep.verification)
            incomplete = incomplete || t.status == VerifyStatus::Inconclusive;
    emit(opts, render_reports(reports, opts.format == "txt" ? "json" : opts.format));
    if (incomplete) std::fprintf(stderr, "note: some targets are inconclusive at this n-max\n");
    return kExitOk;
}

bool parse_range(const std::string& text, unsigned& lo, unsigned& hi) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = static_cast<unsigned>(std::stoul(text));
        } else {
            lo = static_cast<unsigned>(std::stoul(text.substr(0, pos)));
            hi = static_cast<unsigned>(std::stoul(text.substr(pos + 2)));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hankel determinants of convolution powers of Motzkin numbers"};
    app.require_subcommand(1);

    CommonOpts common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"txt", "json", "csv", "md"}));
        sub->add_option("--out", common.out_path, "Write output to this path instead of stdout");
        sub->add_option("--jobs", common.jobs, "Worker threads for independent r values")
            ->check(CLI::Range(1u, 256u));
        sub->add_option("--cache", common.cache_dir, "Determinant table cache directory");
        sub->add_option("--precision", common.precision,
                        "Initial working precision override (series coefficients)");
        sub->add_option("--seed", common.seed,
                        "Seed for randomized property checks (reserved; no effect on tables)");
    };

    unsigned r = 1;
    std::size_t terms = 10;
    auto* motzkin = app.add_subcommand("motzkin", "Coefficient table of M(x)^r");
    motzkin->add_option("--r", r, "Convolution power")->required()->check(CLI::Range(1u, 1000u));
    motzkin->add_option("--terms", terms, "Number of coefficients")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    add_common(motzkin);

    std::size_t n_max = 0;
    std::string method = "tau";
    auto* det = app.add_subcommand("det", "Hankel determinant table H_0..H_n");
    det->add_option("--r", r, "Convolution power")->required()->check(CLI::Range(1u, 1000u));
    det->add_option("--n-max", n_max, "Largest matrix order")->required();
    det->add_option("--method", method, "tau, oracle, or both (compared entry-wise)")
        ->check(CLI::IsMember({"tau", "oracle", "both"}));
    add_common(det);

    long fit_period = 0;
    long fit_deg_max = 24;
    auto* fit = app.add_subcommand("fit", "Fit quasi-polynomial closed forms per residue class");
    fit->add_option("--r", r, "Convolution power")->required()->check(CLI::Range(1u, 1000u));
    fit->add_option("--n-max", n_max, "Largest matrix order")->required();
    fit->add_option("--period", fit_period, "Fix the period instead of detecting it");
    fit->add_option("--deg-max", fit_deg_max, "Degree budget for fitting");
    add_common(fit);

    std::vector<std::string> target_names;
    unsigned r_max = 12;
    long p_max = 10;
    long k_max = 20;
    auto* verify = app.add_subcommand("verify", "Verify closed forms, conjectured identities, families");
    verify->add_option("--targets", target_names, "theorems, conjectures, families")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"theorems", "conjectures", "families"}));
    verify->add_option("--r-max", r_max, "Largest r for conjecture targets")->check(CLI::Range(2u, 64u));
    verify->add_option("--n-max", n_max, "Override the per-r table length");
    verify->add_option("--p-max", p_max, "Largest family parameter")->check(CLI::Range(1L, 64L));
    verify->add_option("--k-max", k_max, "Largest family determinant index + 1")->check(CLI::Range(4L, 40L));
    add_common(verify);

    std::string r_range;
    auto* scan = app.add_subcommand("scan", "Period, closed forms and conjecture status over a range of r");
    scan->add_option("--r", r_range, "r or a range a..b")->required();
    scan->add_option("--n-max", n_max, "Override the per-r table length");
    add_common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (motzkin->parsed()) return cmd_motzkin(r, terms, common);
        if (det->parsed()) return cmd_det(r, n_max, method, common);
        if (fit->parsed()) return cmd_fit(r, n_max, fit_period, fit_deg_max, common);
        if (verify->parsed()) {
            VerifyPlan plan;
            for (const auto& t : target_names) {
                if (t == "theorems") plan.theorems = true;
                if (t == "conjectures") plan.conjectures = true;
                if (t == "families") plan.families = true;
            }
            return cmd_verify(plan, r_max, n_max, p_max, k_max, common);
        }
        if (scan->parsed()) {
            unsigned lo = 0, hi = 0;
            if (!parse_range(r_range, lo, hi)) {
                std::fprintf(stderr, "error: --r expects N or A..B with 1 <= A <= B\n");
                return kExitUsage;
            }
            return cmd_scan(lo, hi, n_max, common);
        }
    } catch (const MismatchError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMismatch;
    } catch (const hankel::PrecisionExhausted& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecision;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return kExitUsage;
}
