#pragma once

#include <array>
#include <vector>

#include "ircb/channel.hpp"
#include "ircb/region.hpp"

namespace ircb {

// Compress-and-forward configuration.
struct CfConfig {
    double n_compress = 1.81;  // quantization noise variance, > 0

    void validate() const;
};

// The eight relay-aided rates I_ki and their relay-free counterparts I_ki',
// k in {1,2} (destination), i in {1..4} (which common layers condition the
// split). Indexed [k-1][i-1]; all values clipped below at 0.
struct CfTerms {
    std::array<std::array<double, 4>, 2> I;
    std::array<std::array<double, 4>, 2> Ip;
};

CfTerms cf_terms(const ChannelSnr& ch, const CfConfig& cfg);

// Sub-region where both destinations decode the compression index.
std::vector<HalfPlane> cf_joint_planes(const CfTerms& t);
// Sub-region where only destination k (1 or 2) decodes it; the other side
// treats the relay signal as noise and uses the primed terms.
std::vector<HalfPlane> cf_single_planes(const CfTerms& t, int k);

// Hull of the three decoding variants.
RateRegion cf_region(const ChannelSnr& ch, const CfConfig& cfg);

// Relay-ignoring baseline: the primed inequality pattern with the power
// split evaluated at unbounded quantization noise.
std::vector<HalfPlane> hk_planes(const ChannelSnr& ch);
RateRegion hk_region(const ChannelSnr& ch);

// Worst-case distance (bits per rate dimension) between the compress-and-
// forward region at noise n and the matching outer bound; minimized near
// n = 1.81. Throws std::domain_error for n <= 0 or nonfinite n.
double cf_gap_objective(double n);

}  // namespace ircb
