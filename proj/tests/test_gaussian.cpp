#include <stdexcept>

#include "doctest.h"
#include "ircb/channel.hpp"
#include "ircb/gaussian.hpp"

using namespace ircb;

namespace {

ChannelSnr chx() {
    ChannelSnr c;
    c.s11 = 12;
    c.s12 = 2.5;
    c.s13 = 7;
    c.s21 = 3;
    c.s22 = 9;
    c.s23 = 4;
    c.s31 = 6;
    return c;
}

}  // namespace

TEST_CASE("system labels and covariance shape") {
    const GaussianSystem sys = build_system(chx(), 0.0);
    CHECK(sys.labels.size() == 9);
    CHECK(sys.cov.rows() == 9);
    CHECK(sys.cov.cols() == 9);
    CHECK((sys.cov - sys.cov.transpose()).norm() == doctest::Approx(0.0));
    CHECK(sys.index("X1") >= 0);
    CHECK(sys.index("V3") >= 0);
    CHECK_THROWS_AS(sys.index("Y4"), std::out_of_range);
    // unit input powers, output variance 1 + sum of SNRs
    CHECK(sys.cov(sys.index("X1"), sys.index("X1")) == doctest::Approx(1.0));
    CHECK(sys.cov(sys.index("Y1"), sys.index("Y1")) ==
          doctest::Approx(1.0 + 12 + 2.5 + 7).epsilon(1e-12));
}

TEST_CASE("mutual information matches single-link capacities") {
    const ChannelSnr c = chx();
    const GaussianSystem sys = build_system(c, 0.0);
    CHECK(mutual_info(sys, {"X1"}, {"Y3"}, {"X3"}) ==
          doctest::Approx(cap(c.s31)).epsilon(1e-9));
    CHECK(mutual_info(sys, {"X2"}, {"Y2"}, {"X1", "X3"}) ==
          doctest::Approx(cap(c.s22)).epsilon(1e-9));
    CHECK(mutual_info(sys, {"X2"}, {"V2"}, {}) ==
          doctest::Approx(cap(c.s12)).epsilon(1e-9));
}

TEST_CASE("input correlation shrinks the relay link information") {
    const ChannelSnr c = chx();
    const double rho = 0.9;
    const GaussianSystem sys = build_system(c, rho);
    // conditioned on X3, the source keeps variance 1 - rho^2
    CHECK(mutual_info(sys, {"X1"}, {"Y3"}, {"X3"}) ==
          doctest::Approx(cap(c.s31 * (1 - rho * rho))).epsilon(1e-9));
    CHECK(mutual_info(sys, {"X1"}, {"X3"}, {}) ==
          doctest::Approx(-0.5 * std::log2(1 - rho * rho)).epsilon(1e-9));
}

TEST_CASE("independence gives zero bits, never negative") {
    const GaussianSystem sys = build_system(chx(), 0.3);
    CHECK(mutual_info(sys, {"X1"}, {"X2"}, {}) == 0.0);
    CHECK(mutual_info(sys, {"V2"}, {"Y3"}, {}) == 0.0);
    CHECK(mutual_info(sys, {"X2"}, {"Y3"}, {"X1"}) == 0.0);
}

TEST_CASE("duplicate labels are ignored") {
    const GaussianSystem sys = build_system(chx(), 0.0);
    const double once = mutual_info(sys, {"X1"}, {"Y1"}, {"X2"});
    CHECK(mutual_info(sys, {"X1", "X1"}, {"Y1", "Y1"}, {"X2", "X2", "X2"}) ==
          doctest::Approx(once).epsilon(1e-12));
}

TEST_CASE("degenerate conditioning through the pseudo-determinant") {
    const GaussianSystem sys = build_system(chx(), 0.0);
    // conditioning b on itself leaves nothing to learn
    CHECK(mutual_info(sys, {"X1"}, {"Y3"}, {"Y3"}) ==
          doctest::Approx(0.0).epsilon(1e-9));
    // a deterministic pair on the b side stays finite
    const double v = mutual_info(sys, {"X1"}, {"Y3", "Y3"}, {"X3"});
    CHECK(v == doctest::Approx(cap(chx().s31)).epsilon(1e-9));
}

TEST_CASE("more evidence never hurts") {
    const GaussianSystem sys = build_system(chx(), 0.0);
    CHECK(mutual_info(sys, {"X1", "X3"}, {"Y1"}, {}) >=
          mutual_info(sys, {"X1"}, {"Y1"}, {}) - 1e-12);
    CHECK(mutual_info(sys, {"X1"}, {"Y1", "Y3"}, {}) >=
          mutual_info(sys, {"X1"}, {"Y1"}, {}) - 1e-12);
}

TEST_CASE("role symmetry of the arguments") {
    const GaussianSystem sys = build_system(chx(), 0.2);
    const double ab = mutual_info(sys, {"X1", "X3"}, {"Y1", "Y2"}, {"V1"});
    const double ba = mutual_info(sys, {"Y1", "Y2"}, {"X1", "X3"}, {"V1"});
    CHECK(ab == doctest::Approx(ba).epsilon(1e-9));
}
