#pragma once

#include <vector>

#include "ircb/channel.hpp"
#include "ircb/region.hpp"

namespace ircb {

// Shaping factors of the decode-and-forward closed forms; each lies in
// [1/2, 1].
struct DfFactors {
    double g1;   // receiver-2 side-information loss
    double g2;   // receiver-1 interference-quantization loss
    double g31;  // relay-link loss, unconditioned
    double g32;  // relay-link loss behind the interference signal
};

DfFactors df_factors(const ChannelSnr& ch);

// Achievable region when the relay decodes the full message of source 1:
// 10 half-planes (two R1, one R2, four R1+R2, two 2R1+R2, one R1+2R2),
// clipped below at 0.
std::vector<HalfPlane> df_full_planes(const ChannelSnr& ch);
RateRegion df_full_region(const ChannelSnr& ch);

// Achievable region when the relay decodes only one message layer:
// 14 half-planes (two R1, one R2, six R1+R2, three 2R1+R2, two R1+2R2),
// clipped below at 0.
std::vector<HalfPlane> df_partial_planes(const ChannelSnr& ch);
RateRegion df_partial_region(const ChannelSnr& ch);

// Hull of the full and partial variants.
RateRegion df_best_region(const ChannelSnr& ch);

}  // namespace ircb
