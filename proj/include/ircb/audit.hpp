#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ircb/channel.hpp"

namespace ircb {

// One row of the relay-link sweep: best sum rates of each bound and the
// per-dimension gaps of the two relaying strategies to the outer bound.
// The cf column reports the better of the compress-forward and no-relay
// sum rates; gap_cf measures the hull of both regions.
struct SweepRow {
    double s31_db;
    double outer;
    double df;
    double cf;
    double hk;
    double gap_df;
    double gap_cf;
};

struct SweepSpec {
    ChannelSnr base;  // s31 is overwritten at every step
    double lo_db = -15.0;
    double hi_db = 25.0;
    double step_db = 0.5;
    double cf_noise = 1.81;

    void validate() const;
};

SweepRow sweep_row(const ChannelSnr& base, double s31_db, double cf_noise);
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

enum class AuditRegime { FullDf, PartialDf, Cf, HkNoRelay };

std::string_view regime_name(AuditRegime regime);
bool regime_parse(std::string_view name, AuditRegime& out);

struct AuditSpec {
    AuditRegime regime = AuditRegime::FullDf;
    int samples = 1000;
    std::uint64_t seed = 1;
    double lo_db = -20.0;
    double hi_db = 40.0;
    double cf_noise = 1.81;

    void validate() const;
};

// Gap histogram bins: bin i covers [i, i+1) * kAuditBinWidth, values past
// the end are clamped into the last bin.
inline constexpr double kAuditBinWidth = 0.1;
inline constexpr int kAuditBins = 20;

struct AuditResult {
    int sampled = 0;  // channels drawn
    int kept = 0;     // channels passing the regime filter
    double max_gap = 0.0;
    ChannelSnr argmax;  // meaningful only when kept > 0
    std::array<int, kAuditBins> histogram{};
};

// Whether the channel falls into the SNR regime where the scheme's constant
// gap ceiling is claimed.
bool regime_accepts(AuditRegime regime, const ChannelSnr& ch);

// Per-family deficit in bits per dimension between the stated outer-bound
// planes and the stated planes of the regime's scheme (full relay decoding,
// layered relay decoding, compress-forward with joint index decoding, or
// the relay-free baseline).
double regime_gap(AuditRegime regime, const ChannelSnr& ch, double cf_noise);

// Draws channels uniformly in dB per link with both gain-sign parities,
// reproducibly from the seed.
AuditResult run_audit(const AuditSpec& spec);

}  // namespace ircb
