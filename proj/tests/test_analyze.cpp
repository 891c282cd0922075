#include <doctest.h>

#include "hankel/analyze.hpp"
#include "hankel/known_forms.hpp"

using namespace hankel;

namespace {

// Synthesize a determinant table from a known closed-form table.
std::vector<Rat> synth(unsigned r, std::size_t len) {
    const KnownFormTable& t = known_forms(r);
    std::vector<Rat> values(len);
    for (std::size_t i = 0; i < len; ++i) {
        const long n = static_cast<long>(i) / t.q;
        const long j = static_cast<long>(i) % t.q;
        values[i] = t.forms[static_cast<std::size_t>(j)].eval(n);
    }
    return values;
}

}  // namespace

TEST_CASE("fit recovers the quadratic class of r=4") {
    std::vector<Rat> values = synth(4, 12 * 6);
    auto form = fit_quasi_poly(values, 12, 2, 4);
    REQUIRE(form.has_value());
    CHECK(form->sign == SignMode::Plus);
    CHECK(form->poly == DensePoly({Rat(-2), Rat(12), Rat(32)}));  // 2(2n+1)(8n-1)
    // samples begin -2, 42, 150
    CHECK(form->eval(0) == Rat(-2));
    CHECK(form->eval(1) == Rat(42));
    CHECK(form->eval(2) == Rat(150));
}

TEST_CASE("fit returns the zero form for a zero class") {
    std::vector<Rat> values = synth(3, 30);
    auto form = fit_quasi_poly(values, 3, 2, 4);
    REQUIRE(form.has_value());
    CHECK(form->poly.is_zero());
}

TEST_CASE("fit of a constant class has degree zero") {
    std::vector<Rat> ones(12, Rat(1));
    auto form = fit_quasi_poly(ones, 1, 0, 5);
    REQUIRE(form.has_value());
    CHECK(form->poly.degree() == 0);
    CHECK(form->sign == SignMode::Plus);
}

TEST_CASE("accepted fits reproduce every sample, not only the fitting points") {
    for (unsigned r : {3u, 4u, 6u}) {
        const KnownFormTable& t = known_forms(r);
        std::vector<Rat> values = synth(r, static_cast<std::size_t>(t.q) * 16);
        for (long j = 0; j < t.q; ++j) {
            auto form = fit_quasi_poly(values, t.q, j, fit_degree_budget(r));
            REQUIRE(form.has_value());
            for (long n = 0; t.q * n + j < static_cast<long>(values.size()); ++n)
                CHECK(form->eval(n) == values[static_cast<std::size_t>(t.q * n + j)]);
        }
    }
}

TEST_CASE("a corrupted held-out sample defeats the fit") {
    std::vector<Rat> values = synth(4, 12 * 6);
    values[12 * 5 + 2] += 1;  // last sample of class j=2
    auto form = fit_quasi_poly(values, 12, 2, 2);
    CHECK(!form.has_value());
}

TEST_CASE("period detection") {
    // r=3: q=3 with alternating signs
    CHECK(detect_period(synth(3, 60)).value().q == 3);
    // r=4: q=12
    CHECK(detect_period(synth(4, 12 * 8)).value().q == 12);
    // r=2: the period-12 sign table compresses to period 6 under (-1)^n
    auto scan2 = detect_period(synth(2, 72));
    REQUIRE(scan2.has_value());
    CHECK(scan2->q == 6);
    bool alternating = false;
    for (const auto& f : scan2->forms)
        alternating = alternating || f.sign == SignMode::AltPlus || f.sign == SignMode::AltMinus;
    CHECK(alternating);
}

TEST_CASE("period detection is stable under doubling the data") {
    for (unsigned r : {2u, 3u, 4u}) {
        const std::size_t base = period_scan_length(r);
        auto a = detect_period(synth(r, base));
        auto b = detect_period(synth(r, 2 * base));
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->q == b->q);
        CHECK(a->q == expected_period(r));
    }
}

TEST_CASE("non-periodic data is rejected") {
    // strictly growing factorials fit no low-degree quasi-polynomial at q=1
    std::vector<Rat> values{Rat(1)};
    for (int i = 1; i < 24; ++i) values.push_back(values.back() * i);
    PeriodScanOptions opts;
    opts.q_max = 4;
    opts.deg_max = 3;
    CHECK(!detect_period(values, opts).has_value());
}

TEST_CASE("fit_signed_constant") {
    std::vector<Rat> alt{Rat(9), Rat(-9), Rat(9), Rat(-9)};
    auto f = fit_signed_constant(alt);
    REQUIRE(f.has_value());
    CHECK(f->sign == SignMode::AltPlus);
    CHECK(f->magnitude == Rat(9));
    CHECK(f->str() == "(-1)^n*9");

    std::vector<Rat> zero{Rat(0), Rat(0)};
    CHECK(fit_signed_constant(zero).value().magnitude == 0);

    std::vector<Rat> drift{Rat(1), Rat(2)};
    CHECK(!fit_signed_constant(drift).has_value());

    // start offset skips the placeholder entry
    std::vector<Rat> off{Rat(77), Rat(-3), Rat(3), Rat(-3)};
    auto g = fit_signed_constant(off, 1);
    REQUIRE(g.has_value());
    CHECK(g->sign == SignMode::AltMinus);
    CHECK(g->magnitude == Rat(3));
}
