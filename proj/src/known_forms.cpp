#include "hankel/known_forms.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace hankel {

namespace {

// n + c
DensePoly lin(long c) { return DensePoly{Rat(c), Rat(1)}; }
// a*n + b
DensePoly lin(long a, long b) { return DensePoly{Rat(b), Rat(a)}; }
DensePoly quad(long a, long b, long c) { return DensePoly{Rat(c), Rat(b), Rat(a)}; }

DensePoly pow(const DensePoly& p, unsigned e) {
    DensePoly r = DensePoly::constant(Rat(1));
    for (unsigned i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

// Ascending coefficients from the conventional descending write-up.
DensePoly desc(std::initializer_list<long> descending) {
    std::vector<Rat> v;
    v.reserve(descending.size());
    for (auto it = std::rbegin(descending); it != std::rend(descending); ++it) v.emplace_back(*it);
    return DensePoly(std::move(v));
}

ClosedForm cf(long q, long j, SignMode s, DensePoly p) { return ClosedForm{q, j, s, std::move(p)}; }

KnownFormTable make_r2() {
    KnownFormTable t{2, 12, {}};
    for (long j = 0; j < 12; ++j) {
        DensePoly p;
        if (j <= 3)
            p = DensePoly::constant(Rat(1));
        else if (j >= 6 && j <= 9)
            p = DensePoly::constant(Rat(-1));
        // classes 4,5,10,11 stay zero
        t.forms.push_back(cf(12, j, SignMode::Plus, std::move(p)));
    }
    return t;
}

KnownFormTable make_r3() {
    KnownFormTable t{3, 3, {}};
    t.forms.push_back(cf(3, 0, SignMode::AltPlus, pow(lin(1), 2)));
    t.forms.push_back(cf(3, 1, SignMode::AltPlus, pow(lin(1), 2)));
    t.forms.push_back(cf(3, 2, SignMode::Plus, DensePoly{}));
    return t;
}

KnownFormTable make_r4() {
    KnownFormTable t{4, 12, {}};
    auto& f = t.forms;
    f.push_back(cf(12, 0, SignMode::Plus, DensePoly::constant(Rat(1))));
    f.push_back(cf(12, 1, SignMode::Plus, DensePoly::constant(Rat(1))));
    f.push_back(cf(12, 2, SignMode::Plus, scale(mul(lin(2, 1), lin(8, -1)), Rat(2))));
    f.push_back(cf(12, 3, SignMode::Plus, scale(mul(lin(8, 9), lin(2, 1)), Rat(-2))));
    f.push_back(cf(12, 4, SignMode::Plus, DensePoly::constant(Rat(-1))));
    f.push_back(cf(12, 5, SignMode::Plus, DensePoly::constant(Rat(-1))));
    f.push_back(cf(12, 6, SignMode::Plus, scale(mul(lin(1), lin(8, 5)), Rat(4))));
    f.push_back(cf(12, 7, SignMode::Plus, scale(pow(lin(1), 2), Rat(-64))));
    f.push_back(cf(12, 8, SignMode::Plus, DensePoly{}));
    f.push_back(cf(12, 9, SignMode::Plus, DensePoly{}));
    f.push_back(cf(12, 10, SignMode::Plus, scale(pow(lin(1), 2), Rat(-64))));
    f.push_back(cf(12, 11, SignMode::Plus, scale(mul(lin(1), lin(8, 11)), Rat(-4))));
    return t;
}

KnownFormTable make_r5() {
    KnownFormTable t{5, 15, {}};
    auto& f = t.forms;
    const DensePoly one = DensePoly::constant(Rat(1));
    f.push_back(cf(15, 0, SignMode::Plus, one));
    f.push_back(cf(15, 1, SignMode::Plus, one));
    f.push_back(cf(15, 2, SignMode::Plus, scale(mul(lin(2, 1), quad(50, 15, -1)), Rat(5))));
    f.push_back(cf(15, 3, SignMode::Plus, scale(mul(quad(25, 25, -2), pow(lin(2, 1), 2)), Rat(25))));
    f.push_back(cf(15, 4, SignMode::Plus, scale(mul(quad(50, 85, 34), lin(2, 1)), Rat(-5))));
    f.push_back(cf(15, 5, SignMode::Plus, one));
    f.push_back(cf(15, 6, SignMode::Plus, one));
    f.push_back(cf(15, 7, SignMode::Plus, scale(mul(lin(1), quad(100, 120, 33)), Rat(5))));
    f.push_back(cf(15, 8, SignMode::Plus, scale(mul(pow(lin(1), 2), quad(100, 100, 17)), Rat(25))));
    f.push_back(cf(15, 9, SignMode::Plus, scale(pow(lin(1), 3), Rat(1000))));
    f.push_back(cf(15, 10, SignMode::Plus, DensePoly{}));
    f.push_back(cf(15, 11, SignMode::Plus, DensePoly{}));
    f.push_back(cf(15, 12, SignMode::Plus, scale(pow(lin(1), 3), Rat(1000))));
    f.push_back(cf(15, 13, SignMode::Plus, scale(mul(pow(lin(1), 2), quad(100, 300, 217)), Rat(25))));
    f.push_back(cf(15, 14, SignMode::Plus, scale(mul(lin(1), quad(100, 280, 193)), Rat(-5))));
    return t;
}

KnownFormTable make_r6() {
    KnownFormTable t{6, 6, {}};
    auto& f = t.forms;
    f.push_back(cf(6, 0, SignMode::AltPlus, pow(lin(1), 5)));
    f.push_back(cf(6, 1, SignMode::AltPlus, pow(lin(1), 5)));
    f.push_back(cf(6, 2, SignMode::AltPlus,
                   scale(mul(mul(mul(lin(4, 5), lin(2, 3)), mul(lin(4, -3), lin(2))), pow(lin(1), 4)),
                         Rat(1, 10))));
    f.push_back(cf(6, 3, SignMode::AltPlus,
                   scale(mul(mul(quad(144, 72, -155), pow(lin(2), 2)),
                             mul(pow(lin(2, 3), 2), pow(lin(1), 3))),
                         Rat(1, 45))));
    f.push_back(cf(6, 4, SignMode::AltMinus,
                   scale(mul(mul(pow(lin(2), 3), pow(lin(2, 3), 2)),
                             mul(quad(144, 792, 925), pow(lin(1), 2))),
                         Rat(1, 45))));
    f.push_back(cf(6, 5, SignMode::AltPlus,
                   scale(mul(mul(mul(lin(4, 15), lin(4, 7)), pow(lin(2), 4)), mul(lin(2, 3), lin(1))),
                         Rat(1, 10))));
    return t;
}

KnownFormTable make_r7() {
    KnownFormTable t{7, 21, {}};
    auto& f = t.forms;
    const DensePoly one = DensePoly::constant(Rat(1));
    const DensePoly np1 = lin(1);
    const DensePoly tw = lin(2, 1);  // 2n+1
    f.push_back(cf(21, 0, SignMode::AltPlus, one));
    f.push_back(cf(21, 1, SignMode::AltPlus, one));
    f.push_back(cf(21, 2, SignMode::AltMinus,
                   scale(mul(tw, desc({374556, 385532, 127449, 13363, 60})), Rat(7, 30))));
    f.push_back(cf(21, 3, SignMode::AltPlus,
                   scale(mul(desc({29647548, 54252996, 27993259, 2344748, -1393217, -227934, -1080}),
                             pow(tw, 2)),
                         Rat(49, 180))));
    f.push_back(cf(21, 4, SignMode::AltMinus,
                   scale(mul(pow(tw, 3),
                             desc({4235364, 12706092, 12161065, 3145310, -906059, -361032, 3420})),
                         Rat(343, 180))));
    f.push_back(cf(21, 5, SignMode::AltMinus,
                   scale(mul(desc({29647548, 123632292, 201441499, 160049288, 61715353, 9000600,
                                   -123300}),
                             pow(tw, 2)),
                         Rat(49, 180))));
    f.push_back(cf(21, 6, SignMode::AltMinus,
                   scale(mul(desc({374556, 1112692, 1218189, 583163, 103170}), tw), Rat(7, 30))));
    f.push_back(cf(21, 7, SignMode::AltMinus, one));
    f.push_back(cf(21, 8, SignMode::AltMinus, one));
    f.push_back(cf(21, 9, SignMode::AltPlus,
                   scale(mul(np1, desc({749112, 1850828, 1698242, 686273, 103230})), Rat(7, 30))));
    f.push_back(cf(21, 10, SignMode::AltMinus,
                   scale(mul(pow(np1, 2),
                             desc({118590192, 375938976, 459474568, 261223312, 59779951, -1682814,
                                   -1959840})),
                         Rat(49, 180))));
    f.push_back(cf(21, 11, SignMode::AltPlus,
                   scale(mul(pow(np1, 3),
                             desc({16941456, 84707280, 148881208, 115228792, 34672057, -1047963,
                                   -1697400})),
                         Rat(343, 90))));
    f.push_back(cf(21, 12, SignMode::AltPlus,
                   scale(mul(pow(np1, 4), desc({115248, 460992, 587608, 288512, 43695})),
                         Rat(2401, 15))));
    f.push_back(cf(21, 13, SignMode::AltMinus, scale(pow(np1, 5), Rat(537824))));
    f.push_back(cf(21, 14, SignMode::Plus, DensePoly{}));
    f.push_back(cf(21, 15, SignMode::Plus, DensePoly{}));
    f.push_back(cf(21, 16, SignMode::AltMinus, scale(pow(np1, 5), Rat(537824))));
    f.push_back(cf(21, 17, SignMode::AltPlus,
                   scale(mul(pow(np1, 4), desc({115248, 460992, 587608, 217952, -26865})),
                         Rat(2401, 15))));
    f.push_back(cf(21, 18, SignMode::AltMinus,
                   scale(mul(pow(np1, 3),
                             desc({16941456, 118590192, 318295768, 398162632, 205815337, -2633505,
                                   -27024030})),
                         Rat(343, 90))));
    f.push_back(cf(21, 19, SignMode::AltMinus,
                   scale(mul(pow(np1, 2),
                             desc({118590192, 1047143328, 3815496328, 7351444912, 7906357711,
                                   4503507834, 1062057240})),
                         Rat(49, 180))));
    f.push_back(cf(21, 20, SignMode::AltMinus,
                   scale(mul(np1, desc({749112, 4142068, 8571962, 7868343, 2702820})), Rat(7, 30))));
    return t;
}

}  // namespace

bool has_known_forms(unsigned r) { return r >= 2 && r <= 7; }

const KnownFormTable& known_forms(unsigned r) {
    static const std::array<KnownFormTable, 6> tables = {make_r2(), make_r3(), make_r4(),
                                                         make_r5(), make_r6(), make_r7()};
    if (!has_known_forms(r))
        throw std::out_of_range("known_forms: no table for r=" + std::to_string(r));
    return tables[r - 2];
}

long expected_period(unsigned r) { return r % 3 == 0 ? static_cast<long>(r) : 3L * r; }

long fit_degree_budget(unsigned r) {
    switch (r) {
        case 1: return 0;
        case 2: return 0;
        case 3: return 2;
        case 4: return 2;
        case 5: return 4;
        case 6: return 9;
        case 7: return 9;
        case 8: return 11;
        case 9: return 16;
        case 10: return 16;
        case 11: return 18;
        case 12: return 23;
        default: return 2 * static_cast<long>(r);  // untested range; generous
    }
}

std::size_t period_scan_length(unsigned r) {
    const long q = expected_period(r);
    const long by_degree = q * (fit_degree_budget(r) + 5);
    const long by_periods = 15L * r;  // five periods of 3r
    return static_cast<std::size_t>(std::max(by_degree, by_periods));
}

}  // namespace hankel
