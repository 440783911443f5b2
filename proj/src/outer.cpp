#include "ircb/outer.hpp"

#include <cmath>
#include <stdexcept>

#include "ircb/gaussian.hpp"

namespace ircb {

std::vector<HalfPlane> outer_planes(const ChannelSnr& ch) {
    ch.validate();
    const double s11 = ch.s11, s12 = ch.s12, s13 = ch.s13;
    const double s21 = ch.s21, s22 = ch.s22, s23 = ch.s23, s31 = ch.s31;
    const double dl = interference_det(ch);

    const double dt = (s11 + s13 + dl) / (1 + s21 + s23);
    const double t1 = (s11 + s31) / (1 + s21);
    const double t2 = (s11 + s31) / (1 + s21 + s31);
    const double u1 = s12 + (s11 + s31 * (1 + s12)) / (1 + s21);
    const double u2 = s12 + (s11 + s31 * (1 + s12)) / (1 + s21 + s31);
    const double w1 = s21 + s23 + s22 / (1 + s12);
    const double w2 = s21 + s22 + s23;
    const double w3 = s21 + s31 + s22 * (1 + s31) / (1 + s12);
    const double w4 = s21 + s22 + s31 * (1 + s22);
    const double v1 = s11 + s12 + s13;
    const double v2 = s11 + s12 + s31 * (1 + s12);
    const double r2i = s22 / (1 + s12);

    const BoundFamily R1{1, 0}, R2{0, 1}, S{1, 1}, D1{2, 1}, D2{1, 2};
    return {
        {R1, cap(s11 + s31)},
        {R1, cap(s11 + s13) + 0.5},
        {R2, cap(s22)},
        {S, cap(dt) + cap(w2) + 0.5},
        {S, cap(s12 + dt) + cap(w1) + 0.5},
        {S, cap(v1) + cap(r2i) + 0.5},
        {S, cap(t1) + cap(w2) + 0.5},
        {S, cap(u1) + cap(w1) + 0.5},
        {S, cap(v2) + cap(r2i)},
        {S, cap(t2) + cap(w4)},
        {S, cap(u2) + cap(w3)},
        {D1, cap(dt) + cap(w1) + cap(v1) + 1.0},
        {D1, cap(dt) + cap(w1) + cap(v2) + 0.5},
        {D1, cap(t1) + cap(v1) + cap(w1) + 1.0},
        {D1, cap(t1) + cap(v2) + cap(w1) + 0.5},
        {D1, cap(t2) + cap(v1) + cap(w3) + 0.5},
        {D1, cap(t2) + cap(v2) + cap(w3)},
        {D2, cap(s12 + dt) + cap(r2i) + cap(w2) + 0.5},
        {D2, cap(u1) + cap(r2i) + cap(w2) + 0.5},
        {D2, cap(u2) + cap(r2i) + cap(w4)},
    };
}

RateRegion outer_region(const ChannelSnr& ch) {
    return RateRegion(outer_planes(ch));
}

std::vector<HalfPlane> outer_planes_correlated(const ChannelSnr& ch,
                                               double rho) {
    GaussianSystem sys = build_system(ch, rho);
    using L = std::vector<std::string>;
    auto mi = [&](const L& a, const L& b, const L& c) {
        return mutual_info(sys, a, b, c);
    };

    // Sixteen distinct mutual-information terms shared by the 20 bounds.
    // The relay side information enters as V1 alone or as the pair (V1,V3).
    const double a1 = mi({"X1"}, {"Y1", "Y3"}, {"X2", "X3"});
    const double a2 = mi({"X1", "X3"}, {"Y1"}, {"X2"});
    const double a3 = mi({"X2"}, {"Y2"}, {"X1", "X3"});
    const double a4 = mi({"X1", "X3"}, {"Y1"}, {"V1", "X2"});
    const double a5 = mi({"X1", "X2", "X3"}, {"Y2"}, {});
    const double a6 = mi({"X1", "X2", "X3"}, {"Y1"}, {"V1"});
    const double a7 = mi({"X1", "X2", "X3"}, {"Y2"}, {"V2"});
    const double a8 = mi({"X1", "X2", "X3"}, {"Y1"}, {});
    const double a9 = mi({"X2"}, {"Y2"}, {"X1", "V2", "X3"});
    const double a10 = mi({"X1"}, {"Y1", "Y3"}, {"V1", "X2", "X3"});
    const double a11 = mi({"X1", "X2"}, {"Y1", "Y3"}, {"V1", "X3"});
    const double a12 = mi({"X1", "X2"}, {"Y1", "Y3"}, {"X3"});
    const double a13 = mi({"X1"}, {"Y1", "Y3"}, {"V1", "V3", "X2", "X3"});
    const double a14 = mi({"X1", "X2"}, {"Y2", "Y3"}, {"X3"});
    const double a15 = mi({"X1", "X2"}, {"Y1", "Y3"}, {"V1", "V3", "X3"});
    const double a16 = mi({"X1", "X2"}, {"Y2", "Y3"}, {"V2", "X3"});

    const BoundFamily R1{1, 0}, R2{0, 1}, S{1, 1}, D1{2, 1}, D2{1, 2};
    return {
        {R1, a1},
        {R1, a2},
        {R2, a3},
        {S, a4 + a5},
        {S, a6 + a7},
        {S, a8 + a9},
        {S, a10 + a5},
        {S, a11 + a7},
        {S, a12 + a9},
        {S, a13 + a14},
        {S, a15 + a16},
        {D1, a4 + a8 + a7},
        {D1, a4 + a12 + a7},
        {D1, a10 + a8 + a7},
        {D1, a10 + a12 + a7},
        {D1, a13 + a8 + a16},
        {D1, a13 + a12 + a16},
        {D2, a6 + a9 + a5},
        {D2, a11 + a9 + a5},
        {D2, a15 + a9 + a14},
    };
}

RateRegion outer_region_correlated(const ChannelSnr& ch, double rho) {
    return RateRegion(outer_planes_correlated(ch, rho));
}

OuterConfig OuterConfig::default_grid() {
    OuterConfig cfg;
    cfg.rho_grid.reserve(201);
    for (int i = 0; i < 201; ++i) cfg.rho_grid.push_back(-1.0 + i / 100.0);
    return cfg;
}

RateRegion outer_region_best(const ChannelSnr& ch, const OuterConfig& cfg) {
    if (cfg.rho_grid.empty())
        throw std::invalid_argument("outer_region_best: empty grid");
    std::vector<RateRegion> regs;
    regs.reserve(cfg.rho_grid.size());
    for (double rho : cfg.rho_grid)
        regs.push_back(outer_region_correlated(ch, rho));
    return hull_union(regs);
}

namespace {

// Ratio of the correlated bound's effective coefficient to its decorrelated
// counterpart, maximized over the free parameter of the inner optimization.
// Returns a negative value when (alpha1, alpha2, rho) falls outside the
// domain where the stationary point exists.
double decorr_objective(double a1, double a2, double rho) {
    if (!(a1 > a2 && a1 > -rho)) return -1.0;
    const double gs = (1 - a1 * a2) / 2 -
                      0.5 * std::sqrt((1 - a1 * a1) * (1 - a2 * a2));
    const double q0 = 1 + a1 * rho;
    const double q2 = gs * (1 - rho * rho);
    const double q1 = q0 + q2;
    const double b1 = gs, b2 = 1 + a2 * rho;
    if (std::fabs(b1 - b2) < 1e-14 || b1 <= 0) return -1.0;
    const double c1 = (q0 * b1 * b1 - q1 * b1 + q2) / (b1 * (b1 - b2));
    const double c2 = (q0 * b2 * b2 - q1 * b2 + q2) / (b2 * (b2 - b1));
    if (!(c1 / c2 < 0)) return -1.0;
    const double beta = std::sqrt(-b1 * c1 / (b2 * c2));
    const double den = b1 - b2 * beta;
    if (den == 0) return -1.0;
    const double g2s = (beta - 1) / den;
    if (g2s < 0) return -1.0;
    const double c0 = q2 / (b1 * b2);
    return c0 + c1 / (1 + b1 * g2s) + c2 / (1 + b2 * g2s);
}

}  // namespace

double decorr_ratio_check(int grid_density) {
    if (grid_density < 10)
        throw std::invalid_argument("decorr_ratio_check: density must be >= 10");
    const int d = grid_density;
    double mx = 0.0;
    for (int i = 0; i < d; ++i) {
        const double a1 = -1 + 2 * (i + 0.5) / d;
        for (int j = 0; j < d; ++j) {
            const double a2 = -1 + 2 * (j + 0.5) / d;
            for (int k = 0; k < d; ++k) {
                const double rho = (k + 0.5) / d;
                mx = std::max(mx, decorr_objective(a1, a2, rho));
            }
        }
    }
    return mx;
}

}  // namespace ircb
