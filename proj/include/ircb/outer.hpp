#pragma once

#include <vector>

#include "ircb/channel.hpp"
#include "ircb/region.hpp"

namespace ircb {

// Closed-form outer bound on the rate region: 20 half-planes, evaluated
// directly from the SNRs. Plane order is fixed: two R1 bounds, one R2 bound,
// eight R1+R2 bounds, six 2R1+R2 bounds, three R1+2R2 bounds.
std::vector<HalfPlane> outer_planes(const ChannelSnr& ch);
RateRegion outer_region(const ChannelSnr& ch);

// Genie-aided outer bound evaluated through the generic Gaussian machinery at
// input correlation rho between X1 and X3. Plane order matches outer_planes;
// each right-hand side is dominated by the closed form's.
std::vector<HalfPlane> outer_planes_correlated(const ChannelSnr& ch,
                                               double rho);
RateRegion outer_region_correlated(const ChannelSnr& ch, double rho);

struct OuterConfig {
    std::vector<double> rho_grid;

    // 201 uniform points over [-1, 1].
    static OuterConfig default_grid();
};

// Hull of the correlation-parameterized outer regions over the grid. A valid
// outer bound: the true region is contained in each fixed-rho region's union.
RateRegion outer_region_best(const ChannelSnr& ch, const OuterConfig& cfg);

// Numerically maximizes the correlated-to-decorrelated bound ratio that
// justifies the fixed additive slack constants of the closed form; scans
// alpha1, alpha2 in (-1,1) and rho in (0,1) at the given per-axis density and
// returns the largest ratio found (analytically at most 2).
double decorr_ratio_check(int grid_density);

}  // namespace ircb
