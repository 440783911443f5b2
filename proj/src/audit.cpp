#include "ircb/audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ircb/cf.hpp"
#include "ircb/df.hpp"
#include "ircb/outer.hpp"
#include "ircb/region.hpp"

namespace ircb {

namespace {

RateRegion to_region(const std::vector<HalfPlane>& planes) {
    RateRegion r;
    for (const HalfPlane& p : planes) r.add(p);
    return r;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ChannelSnr sample_channel(std::mt19937_64& rng, double lo_db, double hi_db) {
    auto draw = [&] {
        return db_to_lin(lo_db + (hi_db - lo_db) * unit_double(rng));
    };
    ChannelSnr ch;
    ch.s11 = draw();
    ch.s12 = draw();
    ch.s13 = draw();
    ch.s21 = draw();
    ch.s22 = draw();
    ch.s23 = draw();
    ch.s31 = draw();
    ch.sign_parity = (rng() & 1u) != 0;
    return ch;
}

}  // namespace

void SweepSpec::validate() const {
    base.validate();
    if (!(lo_db < hi_db)) throw std::invalid_argument("sweep: lo_db < hi_db");
    if (!(step_db > 0.0)) throw std::invalid_argument("sweep: step_db > 0");
    CfConfig{cf_noise}.validate();
}

SweepRow sweep_row(const ChannelSnr& base, double s31_db, double cf_noise) {
    ChannelSnr ch = base;
    ch.s31 = db_to_lin(s31_db);
    const RateRegion outer = outer_region(ch);
    const RateRegion df = df_best_region(ch);
    const RateRegion cf = cf_region(ch, CfConfig{cf_noise});
    const RateRegion hk = hk_region(ch);
    SweepRow row;
    row.s31_db = s31_db;
    row.outer = outer.max_weighted(1, 1);
    row.df = df.max_weighted(1, 1);
    row.cf = std::max(cf.max_weighted(1, 1), hk.max_weighted(1, 1));
    row.hk = hk.max_weighted(1, 1);
    row.gap_df = gap_per_dim(outer, df);
    row.gap_cf = gap_per_dim(outer, hull_union({cf, hk}));
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const int steps =
        static_cast<int>(std::floor((spec.hi_db - spec.lo_db) / spec.step_db +
                                    1e-9)) +
        1;
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        rows.push_back(sweep_row(spec.base, spec.lo_db + i * spec.step_db,
                                 spec.cf_noise));
    return rows;
}

std::string_view regime_name(AuditRegime regime) {
    switch (regime) {
        case AuditRegime::FullDf: return "full-df";
        case AuditRegime::PartialDf: return "partial-df";
        case AuditRegime::Cf: return "cf";
        case AuditRegime::HkNoRelay: return "hk-no-relay";
    }
    throw std::logic_error("regime_name: bad enum");
}

bool regime_parse(std::string_view name, AuditRegime& out) {
    for (AuditRegime r : {AuditRegime::FullDf, AuditRegime::PartialDf,
                          AuditRegime::Cf, AuditRegime::HkNoRelay}) {
        if (name == regime_name(r)) {
            out = r;
            return true;
        }
    }
    return false;
}

void AuditSpec::validate() const {
    if (samples < 1) throw std::invalid_argument("audit: samples >= 1");
    if (!(lo_db < hi_db)) throw std::invalid_argument("audit: lo_db < hi_db");
    CfConfig{cf_noise}.validate();
}

bool regime_accepts(AuditRegime regime, const ChannelSnr& ch) {
    switch (regime) {
        case AuditRegime::FullDf: return ch.s31 >= ch.s11;
        case AuditRegime::PartialDf: return ch.s31 >= ch.s21;
        case AuditRegime::Cf: return ch.s31 <= ch.s21;
        case AuditRegime::HkNoRelay:
            return ch.s31 <= ch.s11 / (1.0 + ch.s12) &&
                   ch.s31 <= ch.s21 / (1.0 + ch.s22);
    }
    throw std::logic_error("regime_accepts: bad enum");
}

double regime_gap(AuditRegime regime, const ChannelSnr& ch, double cf_noise) {
    const RateRegion outer = to_region(outer_planes(ch));
    std::vector<HalfPlane> scheme;
    switch (regime) {
        case AuditRegime::FullDf: scheme = df_full_planes(ch); break;
        case AuditRegime::PartialDf: scheme = df_partial_planes(ch); break;
        case AuditRegime::Cf:
            scheme = cf_joint_planes(cf_terms(ch, CfConfig{cf_noise}));
            break;
        case AuditRegime::HkNoRelay: scheme = hk_planes(ch); break;
    }
    return family_gap_per_dim(outer, to_region(scheme));
}

AuditResult run_audit(const AuditSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    AuditResult res;
    for (int i = 0; i < spec.samples; ++i) {
        const ChannelSnr ch = sample_channel(rng, spec.lo_db, spec.hi_db);
        ++res.sampled;
        if (!regime_accepts(spec.regime, ch)) continue;
        const double g = regime_gap(spec.regime, ch, spec.cf_noise);
        const int bin = std::clamp(static_cast<int>(g / kAuditBinWidth), 0,
                                   kAuditBins - 1);
        ++res.histogram[static_cast<std::size_t>(bin)];
        if (res.kept == 0 || g > res.max_gap) {
            res.max_gap = g;
            res.argmax = ch;
        }
        ++res.kept;
    }
    return res;
}

}  // namespace ircb
