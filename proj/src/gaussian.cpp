#include "ircb/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ircb {

namespace {

constexpr double kEigCutoff = 1e-10;

// Product of eigenvalues with |w| above the cutoff; 1 for an empty matrix.
double pseudo_det(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    double p = 1.0;
    for (double w : es.eigenvalues())
        if (std::fabs(w) > kEigCutoff) p *= w;
    return p;
}

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const auto& w = es.eigenvalues();
    double wmax = 0.0;
    for (double v : w) wmax = std::max(wmax, std::fabs(v));
    double cut = std::max(wmax * 1e-12, 1e-300);
    Eigen::VectorXd inv(w.size());
    for (int i = 0; i < w.size(); ++i)
        inv[i] = std::fabs(w[i]) > cut ? 1.0 / w[i] : 0.0;
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m,
                          const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    Eigen::MatrixXd s(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            s(i, j) = m(rows[i], cols[j]);
    return s;
}

// Covariance of the b-variables given the c-variables.
Eigen::MatrixXd conditional_cov(const Eigen::MatrixXd& cov,
                                const std::vector<int>& b,
                                const std::vector<int>& c) {
    Eigen::MatrixXd sbb = submatrix(cov, b, b);
    if (c.empty()) return sbb;
    Eigen::MatrixXd sbc = submatrix(cov, b, c);
    Eigen::MatrixXd scc = submatrix(cov, c, c);
    return sbb - sbc * pseudo_inverse(scc) * sbc.transpose();
}

}  // namespace

int GaussianSystem::index(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw std::out_of_range("GaussianSystem: unknown label " + label);
}

GaussianSystem build_system(const ChannelSnr& ch, double rho) {
    ch.validate();
    if (!(std::fabs(rho) <= 1.0))
        throw std::domain_error("build_system: |rho| must be <= 1");

    const double h11 = std::sqrt(ch.s11), h12 = std::sqrt(ch.s12),
                 h13 = std::sqrt(ch.s13), h21 = std::sqrt(ch.s21),
                 h22 = std::sqrt(ch.s22), h31 = std::sqrt(ch.s31);
    const double h23 =
        ch.sign_parity ? std::sqrt(ch.s23) : -std::sqrt(ch.s23);

    // Primitive basis: X1 X2 X3 Z1 Z2 Z3 Z1' Z2' Z3' with cov(X1,X3) = rho.
    Eigen::MatrixXd base = Eigen::MatrixXd::Identity(9, 9);
    base(0, 2) = base(2, 0) = rho;

    GaussianSystem sys;
    sys.labels = {"X1", "X2", "X3", "Y1", "Y2", "Y3", "V1", "V2", "V3"};
    Eigen::MatrixXd a(9, 9);
    a.setZero();
    a.row(0) << 1, 0, 0, 0, 0, 0, 0, 0, 0;                    // X1
    a.row(1) << 0, 1, 0, 0, 0, 0, 0, 0, 0;                    // X2
    a.row(2) << 0, 0, 1, 0, 0, 0, 0, 0, 0;                    // X3
    a.row(3) << h11, h12, h13, 1, 0, 0, 0, 0, 0;              // Y1
    a.row(4) << h21, h22, h23, 0, 1, 0, 0, 0, 0;              // Y2
    a.row(5) << h31, 0, 0, 0, 0, 1, 0, 0, 0;                  // Y3
    a.row(6) << h21, 0, h23, 0, 0, 0, 0, 1, 0;                // V1
    a.row(7) << 0, h12, 0, 0, 0, 0, 1, 0, 0;                  // V2
    a.row(8) << h31, 0, 0, 0, 0, 0, 0, 0, 1;                  // V3
    sys.cov = a * base * a.transpose();
    return sys;
}

double mutual_info(const GaussianSystem& sys,
                   const std::vector<std::string>& a,
                   const std::vector<std::string>& b,
                   const std::vector<std::string>& c) {
    std::set<int> sa, sb, sc;
    for (const auto& l : a) sa.insert(sys.index(l));
    for (const auto& l : b) sb.insert(sys.index(l));
    for (const auto& l : c) sc.insert(sys.index(l));

    std::vector<int> ib(sb.begin(), sb.end());
    std::vector<int> ic(sc.begin(), sc.end());
    std::set<int> sac = sc;
    sac.insert(sa.begin(), sa.end());
    std::vector<int> iac(sac.begin(), sac.end());

    double num = pseudo_det(conditional_cov(sys.cov, ib, ic));
    double den = pseudo_det(conditional_cov(sys.cov, ib, iac));
    num = std::max(num, 1e-300);
    den = std::max(den, 1e-300);
    return std::max(0.5 * std::log2(num / den), 0.0);
}

}  // namespace ircb
