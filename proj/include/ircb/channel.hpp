#pragma once

#include <cmath>
#include <stdexcept>

namespace ircb {

// Capacity of a real Gaussian channel at the given SNR, in bits per real
// dimension.
inline double cap(double snr) {
    if (!(snr >= 0.0)) throw std::domain_error("cap: SNR must be >= 0");
    return 0.5 * std::log2(1.0 + snr);
}

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }

// Link SNRs of the two-pair interference channel whose relay observes source 1
// only: sij = |h_ij|^2 P_j / N_i under unit powers and unit noise variances.
// Receiver 1 sees sources 1, 2, 3 via s11, s12, s13; receiver 2 via s21, s22,
// s23; the relay sees source 1 via s31.
//
// sign_parity is true when the 2x2 matrix [[h11, h13], [h21, h23]] of
// direct/relay gains has an even number of negative entries. Only this parity
// is observable in the implemented bounds: it selects the sign inside
// interference_det.
struct ChannelSnr {
    double s11 = 0, s12 = 0, s13 = 0;
    double s21 = 0, s22 = 0, s23 = 0;
    double s31 = 0;
    bool sign_parity = true;

    void validate() const {
        const double v[] = {s11, s12, s13, s21, s22, s23, s31};
        for (double x : v)
            if (!std::isfinite(x) || x < 0.0)
                throw std::invalid_argument(
                    "ChannelSnr: SNRs must be finite and >= 0");
    }
};

// Squared determinant of the scaled direct/relay gain matrix:
// (sqrt(s11*s23) -+ sqrt(s13*s21))^2, minus sign for even parity.
inline double interference_det(const ChannelSnr& ch) {
    const double a = std::sqrt(ch.s11 * ch.s23);
    const double b = std::sqrt(ch.s13 * ch.s21);
    const double d = ch.sign_parity ? a - b : a + b;
    return d * d;
}

}  // namespace ircb
