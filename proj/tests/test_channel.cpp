#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "ircb/channel.hpp"

using namespace ircb;

TEST_CASE("cap matches half-log2 values") {
    CHECK(cap(0.0) == 0.0);
    CHECK(cap(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cap(100.0) == doctest::Approx(3.3291057413759).epsilon(1e-12));
    CHECK(cap(200.0) == doctest::Approx(3.82552584558946).epsilon(1e-12));
    CHECK(cap(6.31) == doctest::Approx(1.43493570308886).epsilon(1e-12));
}

TEST_CASE("cap rejects negative SNR") {
    CHECK_THROWS_AS(cap(-1e-9), std::domain_error);
    CHECK_THROWS_AS(cap(-1.0), std::domain_error);
}

TEST_CASE("dB conversions invert each other") {
    CHECK(db_to_lin(20.0) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(db_to_lin(0.0) == 1.0);
    CHECK(lin_to_db(db_to_lin(-13.7)) == doctest::Approx(-13.7).epsilon(1e-12));
    CHECK(db_to_lin(lin_to_db(42.0)) == doctest::Approx(42.0).epsilon(1e-12));
}

TEST_CASE("channel validation") {
    ChannelSnr ch;
    ch.validate();  // all-zero is a valid degenerate channel
    ch.s22 = -0.5;
    CHECK_THROWS_AS(ch.validate(), std::invalid_argument);
    ch.s22 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ch.validate(), std::invalid_argument);
    ch.s22 = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ch.validate(), std::invalid_argument);
}

TEST_CASE("interference determinant and its parity") {
    ChannelSnr ch;
    ch.s11 = 100.0;
    ch.s23 = 100.0;
    ch.s13 = 6.3096;
    ch.s21 = 6.3096;
    ch.sign_parity = true;
    CHECK(interference_det(ch) == doctest::Approx(8777.89105216).epsilon(1e-10));
    ch.sign_parity = false;
    // odd parity flips the inner sign: (100 + 6.3096)^2
    CHECK(interference_det(ch) ==
          doctest::Approx(106.3096 * 106.3096).epsilon(1e-12));

    // with either cross product zero the parity is irrelevant
    ChannelSnr one_sided;
    one_sided.s11 = 9.0;
    one_sided.s23 = 4.0;
    one_sided.sign_parity = true;
    const double even = interference_det(one_sided);
    one_sided.sign_parity = false;
    CHECK(interference_det(one_sided) == even);
    CHECK(even == doctest::Approx(36.0).epsilon(1e-14));
}
