#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ircb/channel.hpp"

namespace ircb {

// A set of jointly Gaussian, zero-mean variables identified by label, with
// their covariance matrix. Unit-noise normalization throughout: powers and
// noise variances are 1 and link magnitudes are sqrt(SNR).
struct GaussianSystem {
    std::vector<std::string> labels;
    Eigen::MatrixXd cov;

    int index(const std::string& label) const;  // throws on unknown label
};

// Builds the channel variables for the two-pair interference channel with a
// relay listening to source 1: inputs X1, X2, X3 (unit power,
// corr(X1,X3) = rho, X2 independent), outputs
//   Y1 = h11 X1 + h12 X2 + h13 X3 + Z1
//   Y2 = h21 X1 + h22 X2 + h23 X3 + Z2
//   Y3 = h31 X1 + Z3
// plus the side-information variables V1 = h21 X1 + h23 X3 + Z2',
// V2 = h12 X2 + Z1', V3 = h31 X1 + Z3' built with independent noise copies.
// h23 is negative when sign_parity is false; all other gains are positive
// roots of their SNRs.
GaussianSystem build_system(const ChannelSnr& ch, double rho);

// I(a; b | c) in bits for jointly Gaussian variables:
// 0.5*log2(det S_{b|c} / det S_{b|a,c}), clipped below at 0. Deterministic
// linear dependencies are handled by pseudo-determinants over eigenvalues
// above 1e-10. Labels may repeat within or across sets; duplicates are
// ignored.
double mutual_info(const GaussianSystem& sys,
                   const std::vector<std::string>& a,
                   const std::vector<std::string>& b,
                   const std::vector<std::string>& c);

}  // namespace ircb
