#include "ircb/cf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ircb {

namespace {

double half_log2(double x) { return 0.5 * std::log2(x); }

// Relay-free counterparts depend on the channel only through the split.
std::array<std::array<double, 4>, 2> primed_terms(const ChannelSnr& ch,
                                                  double ab1, double ab2) {
    const double s11 = ch.s11, s12 = ch.s12;
    const double s21 = ch.s21, s22 = ch.s22;
    std::array<std::array<double, 4>, 2> ip{};
    ip[0][0] = half_log2((1 + ab1 * s11 + ab2 * s12) / (1 + ab2 * s12));
    ip[0][1] = half_log2((1 + s11 + ab2 * s12) / (1 + ab2 * s12));
    ip[0][2] = half_log2((1 + ab1 * s11 + s12) / (1 + ab2 * s12));
    ip[0][3] = half_log2((1 + s11 + s12) / (1 + ab2 * s12));
    ip[1][0] = half_log2((1 + ab1 * s21 + ab2 * s22) / (1 + ab1 * s21));
    ip[1][1] = half_log2((1 + ab1 * s21 + s22) / (1 + ab1 * s21));
    ip[1][2] = half_log2((1 + s21 + ab2 * s22) / (1 + ab1 * s21));
    ip[1][3] = half_log2((1 + s21 + s22) / (1 + ab1 * s21));
    for (auto& row : ip)
        for (auto& v : row) v = std::max(v, 0.0);
    return ip;
}

RateRegion to_region(const std::vector<HalfPlane>& planes) {
    RateRegion r;
    for (const auto& p : planes) r.add(p);
    return r;
}

}  // namespace

void CfConfig::validate() const {
    if (!(n_compress > 0) || !std::isfinite(n_compress))
        throw std::invalid_argument("cf: n_compress must be positive and finite");
}

CfTerms cf_terms(const ChannelSnr& ch, const CfConfig& cfg) {
    ch.validate();
    cfg.validate();
    const double s11 = ch.s11, s12 = ch.s12, s13 = ch.s13;
    const double s21 = ch.s21, s22 = ch.s22, s23 = ch.s23;
    const double s31 = ch.s31;
    const double N = cfg.n_compress;
    const double ab1 = 1.0 / (1 + s21 + s31 / (1 + N));
    const double ab2 = 1.0 / (1 + s12);
    const double den1 = (1 + N) * (1 + ab2 * s12);
    const double den2 = (1 + N) * (1 + ab1 * s21) + ab1 * s31;

    CfTerms t;
    // Each rate is the smaller of the compression-forwarding branch and the
    // decoding-limited branch at destination k.
    t.I[0][0] = std::min(
        half_log2(((1 + N) * (1 + ab1 * s11 + ab2 * s12) +
                   ab1 * s31 * (1 + ab2 * s12)) /
                  den1),
        half_log2(N * (1 + ab1 * s11 + ab2 * s12 + s13) / den1));
    t.I[0][1] = std::min(
        half_log2(((1 + N) * (1 + s11 + ab2 * s12) + s31 * (1 + ab2 * s12)) /
                  den1),
        half_log2(N * (1 + s11 + ab2 * s12 + s13) / den1));
    t.I[0][2] = std::min(
        half_log2(((1 + N) * (1 + ab1 * s11 + s12) +
                   ab1 * s31 * (1 + s12)) /
                  den1),
        half_log2(N * (1 + ab1 * s11 + s12 + s13) / den1));
    t.I[0][3] = std::min(
        half_log2(((1 + N) * (1 + s11 + s12) + s31 * (1 + s12)) / den1),
        half_log2(N * (1 + s11 + s12 + s13) / den1));
    t.I[1][0] = std::min(
        half_log2(((1 + N) * (1 + ab1 * s21 + ab2 * s22) +
                   ab1 * s31 * (1 + ab2 * s22)) /
                  den2),
        half_log2(N * (1 + ab1 * s21 + ab2 * s22 + s23) / den2));
    t.I[1][1] = std::min(
        half_log2(((1 + N) * (1 + ab1 * s21 + s22) +
                   ab1 * s31 * (1 + s22)) /
                  den2),
        half_log2(N * (1 + ab1 * s21 + s22 + s23) / den2));
    t.I[1][2] = std::min(
        half_log2(((1 + N) * (1 + s21 + ab2 * s22) +
                   s31 * (1 + ab2 * s22)) /
                  den2),
        half_log2(N * (1 + s21 + ab2 * s22 + s23) / den2));
    t.I[1][3] = std::min(
        half_log2(((1 + N) * (1 + s21 + s22) + s31 * (1 + s22)) / den2),
        half_log2(N * (1 + s21 + s22 + s23) / den2));
    for (auto& row : t.I)
        for (auto& v : row) v = std::max(v, 0.0);

    t.Ip = primed_terms(ch, ab1, ab2);
    return t;
}

std::vector<HalfPlane> cf_joint_planes(const CfTerms& t) {
    return {
        {{1, 0}, t.I[0][1]},
        {{0, 1}, t.I[1][1]},
        {{1, 1}, t.I[0][0] + t.I[1][3]},
        {{1, 1}, t.I[1][0] + t.I[0][3]},
        {{1, 1}, t.I[0][2] + t.I[1][2]},
        {{2, 1}, t.I[0][0] + t.I[0][3] + t.I[1][2]},
        {{1, 2}, t.I[1][0] + t.I[1][3] + t.I[0][2]},
    };
}

std::vector<HalfPlane> cf_single_planes(const CfTerms& t, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("cf: k must be 1 or 2");
    const int a = k - 1;      // decodes the compression index
    const int b = 2 - k;      // treats the relay signal as noise
    const BoundFamily fk = (k == 1) ? BoundFamily{1, 0} : BoundFamily{0, 1};
    const BoundFamily fj = (k == 1) ? BoundFamily{0, 1} : BoundFamily{1, 0};
    const BoundFamily f2k = (k == 1) ? BoundFamily{2, 1} : BoundFamily{1, 2};
    const BoundFamily f2j = (k == 1) ? BoundFamily{1, 2} : BoundFamily{2, 1};
    return {
        {fk, t.I[a][1]},
        {fj, t.Ip[b][1]},
        {{1, 1}, t.I[a][0] + t.Ip[b][3]},
        {{1, 1}, t.I[a][3] + t.Ip[b][0]},
        {{1, 1}, t.I[a][2] + t.Ip[b][2]},
        {f2k, t.I[a][0] + t.I[a][3] + t.Ip[b][2]},
        {f2j, t.I[a][2] + t.Ip[b][0] + t.Ip[b][3]},
    };
}

RateRegion cf_region(const ChannelSnr& ch, const CfConfig& cfg) {
    const CfTerms t = cf_terms(ch, cfg);
    return hull_union({to_region(cf_joint_planes(t)),
                       to_region(cf_single_planes(t, 1)),
                       to_region(cf_single_planes(t, 2))});
}

std::vector<HalfPlane> hk_planes(const ChannelSnr& ch) {
    ch.validate();
    const double ab1 = 1.0 / (1 + ch.s21);
    const double ab2 = 1.0 / (1 + ch.s12);
    const auto ip = primed_terms(ch, ab1, ab2);
    return {
        {{1, 0}, ip[0][1]},
        {{0, 1}, ip[1][1]},
        {{1, 1}, ip[0][0] + ip[1][3]},
        {{1, 1}, ip[1][0] + ip[0][3]},
        {{1, 1}, ip[0][2] + ip[1][2]},
        {{2, 1}, ip[0][0] + ip[0][3] + ip[1][2]},
        {{1, 2}, ip[1][0] + ip[1][3] + ip[0][2]},
    };
}

RateRegion hk_region(const ChannelSnr& ch) { return to_region(hk_planes(ch)); }

double cf_gap_objective(double n) {
    if (!(n > 0) || !std::isfinite(n))
        throw std::domain_error("cf_gap_objective: n must be positive");
    const double a = cap(n) + cap((1 + 2 * n) / (2 + n));
    const double b = 1 + cap(1 / n);
    return (1 + cap(1 / n) + std::max(a, b)) / 2;
}

}  // namespace ircb
