#include "doctest.h"
#include "ircb/channel.hpp"
#include "ircb/df.hpp"
#include "ircb/region.hpp"

using namespace ircb;

namespace {

ChannelSnr chx() {
    ChannelSnr c;
    c.s11 = 12;
    c.s12 = 2.5;
    c.s13 = 7;
    c.s21 = 3;
    c.s22 = 9;
    c.s23 = 4;
    c.s31 = 6;
    return c;
}

ChannelSnr chg() {
    ChannelSnr c;
    c.s11 = 3.7;
    c.s12 = 0.9;
    c.s13 = 5.2;
    c.s21 = 1.4;
    c.s22 = 6.0;
    c.s23 = 2.2;
    c.s31 = 8.5;
    return c;
}

}  // namespace

TEST_CASE("time-sharing power factors") {
    const DfFactors g = df_factors(chg());
    CHECK(g.g1 == doctest::Approx(0.582025677603424).epsilon(1e-12));
    CHECK(g.g2 == doctest::Approx(0.678571428571429).epsilon(1e-12));
    CHECK(g.g31 == doctest::Approx(0.527777777777778).epsilon(1e-12));
    CHECK(g.g32 == doctest::Approx(0.561855670103093).epsilon(1e-12));

    // no cross links into destination 2: the first factor degenerates to 1
    ChannelSnr c = chg();
    c.s21 = 0.0;
    c.s23 = 0.0;
    CHECK(df_factors(c).g1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(df_full_planes(c)[2].b ==
          doctest::Approx(cap(c.s22) - 0.5).epsilon(1e-12));
    CHECK(df_full_planes(c)[2].b ==
          doctest::Approx(0.903677461028802).epsilon(1e-12));
}

TEST_CASE("full relay decoding bounds at a reference channel") {
    const auto p = df_full_planes(chx());
    REQUIRE(p.size() == 10);
    const double want[10] = {
        1.4036774610288,  1.79747329464689, 0.781468097195579,
        2.34258508803743, 1.76746090911078, 2.22985808649367,
        1.98942021874377, 3.857025648031,   3.28190146910434,
        3.20483774524388};
    const int fams[10] = {0, 0, 1, 2, 2, 2, 2, 3, 3, 4};
    for (int i = 0; i < 10; ++i) {
        CHECK(p[i].b == doctest::Approx(want[i]).epsilon(1e-12));
        CHECK(family_index(p[i].fam) == fams[i]);
    }
    // the first bound is the relay decoding constraint
    CHECK(p[0].b == doctest::Approx(cap(chx().s31)).epsilon(1e-12));
}

TEST_CASE("layered relay decoding bounds at a reference channel") {
    const auto p = df_partial_planes(chx());
    REQUIRE(p.size() == 14);
    const double want[14] = {
        1.33990243616855, 1.79747329464689, 0.781468097195579,
        2.34258508803743, 1.81119232973595, 2.22985808649367,
        1.81326934677833, 1.98942021874377, 2.31695911196113,
        3.857025648031,   3.68456454124835, 3.32563288972951,
        3.20483774524388, 2.78824900552853};
    const int fams[14] = {0, 0, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4};
    for (int i = 0; i < 14; ++i) {
        CHECK(p[i].b == doctest::Approx(want[i]).epsilon(1e-12));
        CHECK(family_index(p[i].fam) == fams[i]);
    }
}

TEST_CASE("bounds are clipped at zero for a degenerate channel") {
    const ChannelSnr zero{};
    for (const auto& p : df_full_planes(zero)) CHECK(p.b == 0.0);
    for (const auto& p : df_partial_planes(zero)) CHECK(p.b == 0.0);
}

TEST_CASE("combined region is the hull of both decoding depths") {
    const ChannelSnr c = chx();
    const RateRegion full = df_full_region(c);
    const RateRegion part = df_partial_region(c);
    const RateRegion best = df_best_region(c);
    for (BoundFamily f : kFamilies) {
        const double expect = std::max(full.support(f), part.support(f));
        CHECK(best.support(f) == doctest::Approx(expect).epsilon(1e-12));
    }
}
