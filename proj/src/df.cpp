#include "ircb/df.hpp"

#include <algorithm>
#include <cmath>

namespace ircb {

namespace {

// Half-bit units contributed by a shaping factor: (1/2) log2(g).
double half_lg(double g) { return 0.5 * std::log2(g); }

RateRegion to_region(const std::vector<HalfPlane>& planes) {
    RateRegion r;
    for (const auto& p : planes) r.add(p);
    return r;
}

}  // namespace

DfFactors df_factors(const ChannelSnr& ch) {
    const double s21 = ch.s21, s23 = ch.s23, s12 = ch.s12, s31 = ch.s31;
    DfFactors f;
    f.g1 = (1 + 2 * s21 + 2 * s23 + s21 * s21 + 2 * s21 * s23) /
           (1 + 3 * s21 + 3 * s23 + 2 * s21 * s21 + 4 * s21 * s23);
    f.g2 = (1 + s12) / (1 + 2 * s12);
    f.g31 = (1 + s31) / (1 + 2 * s31);
    f.g32 = (1 + s21 + s31) / (1 + s21 + 2 * s31);
    return f;
}

std::vector<HalfPlane> df_full_planes(const ChannelSnr& ch) {
    ch.validate();
    const double s11 = ch.s11, s12 = ch.s12, s13 = ch.s13;
    const double s21 = ch.s21, s22 = ch.s22, s23 = ch.s23;
    const double s31 = ch.s31;
    const DfFactors g = df_factors(ch);
    const double dl = interference_det(ch);
    // Combined direct-plus-relay signal seen past both interference layers.
    const double F =
        (s11 + s13 + dl + s11 * s23 / (1 + s21)) / (1 + s21 + 2 * s23);
    const double w1 = s21 + s23 + s22 / (1 + s12);
    const double w2 = s21 + s22 + s23;
    const double v1 = s11 + s12 + s13;

    std::vector<HalfPlane> b = {
        {{1, 0}, cap(s31)},
        {{1, 0}, cap(g.g2 * (s11 + s13))},
        {{0, 1}, cap(g.g1 * s22) - 0.5},
        {{1, 1}, cap(g.g2 * F) + cap(w2) + half_lg(g.g1)},
        {{1, 1}, cap(s31 / (1 + s21)) + cap(w2) + half_lg(g.g1) - 0.5},
        {{1, 1}, cap(s12 + F) + cap(w1) + half_lg(g.g1 * g.g2)},
        {{1, 1},
         cap(v1) + cap(g.g1 * s22 / (1 + s12)) + half_lg(g.g2) - 0.5},
        {{2, 1}, cap(g.g2 * F) + cap(v1) + half_lg(g.g1 * g.g2) + cap(w1)},
        {{2, 1},
         cap(s31 / (1 + s21)) + cap(v1) - 0.5 + cap(w1) +
             half_lg(g.g1 * g.g2)},
        {{1, 2},
         cap(s12 + F) + cap(g.g1 * s22 / (1 + s12)) + cap(w2) +
             half_lg(g.g1 * g.g2)},
    };
    for (auto& p : b) p.b = std::max(p.b, 0.0);
    return b;
}

RateRegion df_full_region(const ChannelSnr& ch) {
    return to_region(df_full_planes(ch));
}

std::vector<HalfPlane> df_partial_planes(const ChannelSnr& ch) {
    ch.validate();
    const double s11 = ch.s11, s12 = ch.s12, s13 = ch.s13;
    const double s21 = ch.s21, s22 = ch.s22, s23 = ch.s23;
    const double s31 = ch.s31;
    const DfFactors g = df_factors(ch);
    const double dl = interference_det(ch);
    const double F =
        (s11 + s13 + dl + s11 * s23 / (1 + s21)) / (1 + s21 + 2 * s23);
    const double w1 = s21 + s23 + s22 / (1 + s12);
    const double w2 = s21 + s22 + s23;
    const double v1 = s11 + s12 + s13;
    // Layer-split terms: relay link with and without the cross signal
    // resolved, and the private direct link behind relay plus cross noise.
    const double a1x = cap(s31) + half_lg(g.g31);
    const double a1 = cap(s31 / (1 + s21)) + half_lg(g.g32);
    const double b1 = cap(g.g2 * s11 / (1 + s21 + s31));
    const double b4 = cap(s12 + s11 / (1 + s21 + s31)) + half_lg(g.g2);

    std::vector<HalfPlane> b = {
        {{1, 0}, a1x + b1},
        {{1, 0}, cap(g.g2 * (s11 + s13))},
        {{0, 1}, cap(g.g1 * s22) - 0.5},
        {{1, 1}, cap(g.g2 * F) + cap(w2) + half_lg(g.g1)},
        {{1, 1}, a1 + b1 + cap(w2) + half_lg(g.g1) - 0.5},
        {{1, 1}, cap(s12 + F) + cap(w1) + half_lg(g.g1 * g.g2)},
        {{1, 1}, a1 + b4 + cap(w1) + half_lg(g.g1) - 0.5},
        {{1, 1},
         cap(v1) + cap(g.g1 * s22 / (1 + s12)) + half_lg(g.g2) - 0.5},
        {{1, 1}, a1x + b4 + cap(g.g1 * s22 / (1 + s12))},
        {{2, 1}, cap(g.g2 * F) + cap(v1) + half_lg(g.g1 * g.g2) + cap(w1)},
        {{2, 1}, cap(g.g2 * F) + b4 + a1x + cap(w1) + half_lg(g.g1)},
        {{2, 1},
         a1 + b1 - 0.5 + cap(v1) + half_lg(g.g2) + cap(w1) + half_lg(g.g1)},
        {{1, 2},
         cap(s12 + F) + cap(g.g1 * s22 / (1 + s12)) + cap(w2) +
             half_lg(g.g1 * g.g2)},
        {{1, 2},
         a1 + b4 - 0.5 + cap(g.g1 * s22 / (1 + s12)) + cap(w2) +
             half_lg(g.g1)},
    };
    for (auto& p : b) p.b = std::max(p.b, 0.0);
    return b;
}

RateRegion df_partial_region(const ChannelSnr& ch) {
    return to_region(df_partial_planes(ch));
}

RateRegion df_best_region(const ChannelSnr& ch) {
    return hull_union({df_full_region(ch), df_partial_region(ch)});
}

}  // namespace ircb
