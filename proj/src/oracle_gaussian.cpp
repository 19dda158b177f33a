#include <cmath>
#include <stdexcept>

#include "tdsts/oracle.hpp"

namespace tdsts::oracle {

namespace {

using Eigen::Matrix2d;
using Eigen::Matrix4d;
using Eigen::Vector4d;

// Heisenberg maps R -> S R of the circuit gates, quadrature ordering
// (x, p, x_tilde, p_tilde). The tilde mode is kept in the standard
// convention (momentum sign flipped relative to tilde conjugation), under
// which the thermal generator is the plain two-mode squeezer below.

Matrix4d thermal_symplectic(double theta) {
    const double c = std::cosh(theta);
    const double s = std::sinh(theta);
    Matrix4d m;
    m << c, 0, s, 0,
         0, c, 0, -s,
         s, 0, c, 0,
         0, -s, 0, c;
    return m;
}

Matrix2d squeeze_block(double r, double phi, double mw, double tilde_sign) {
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    const double cp = std::cos(phi);
    const double sp = tilde_sign * std::sin(phi);
    Matrix2d m;
    m << ch + sh * cp, sh * sp / mw,
         mw * sh * sp, ch - sh * cp;
    return m;
}

Matrix2d rotation_block(double wt, double mw, double dir) {
    const double c = std::cos(wt);
    const double s = dir * std::sin(wt);
    Matrix2d m;
    m << c, s / mw,
         -mw * s, c;
    return m;
}

}  // namespace

GaussianMode gaussian_tfd_state(const StateSpec& spec, double t) {
    spec.validate();
    if (!std::isfinite(t)) throw std::domain_error("gaussian_tfd_state: t must be finite");
    const ThermalAngles ang = spec.angles();
    const auto& o = spec.osc;
    const double mw = o.m * o.omega;

    Vector4d mean = Vector4d::Zero();
    Matrix4d cov = Matrix4d::Zero();
    cov(0, 0) = cov(2, 2) = 0.5 * o.hbar / mw;
    cov(1, 1) = cov(3, 3) = 0.5 * o.hbar * mw;

    const auto apply = [&](const Matrix4d& s) {
        mean = s * mean;
        cov = s * cov * s.transpose();
        cov = 0.5 * (cov + cov.transpose()).eval();  // keep exactly symmetric
    };

    apply(thermal_symplectic(ang.theta1));

    Matrix4d sq = Matrix4d::Zero();
    sq.topLeftCorner<2, 2>() = squeeze_block(spec.z.r, spec.z.phi, mw, +1.0);
    sq.bottomRightCorner<2, 2>() = squeeze_block(spec.z.r, spec.z.phi, mw, -1.0);
    apply(sq);

    Vector4d shift;
    const double dx = std::sqrt(2.0 * o.hbar / mw) * spec.alpha.re;
    const double dp = std::sqrt(2.0 * o.hbar * mw) * spec.alpha.im;
    shift << dx, dp, dx, -dp;
    mean += shift;

    apply(thermal_symplectic(ang.theta2));

    Matrix4d ev = Matrix4d::Zero();
    ev.topLeftCorner<2, 2>() = rotation_block(o.omega * t, mw, +1.0);
    ev.bottomRightCorner<2, 2>() = rotation_block(o.omega * t, mw, -1.0);
    apply(ev);

    GaussianMode out;
    out.mean = mean;
    out.cov = cov;
    return out;
}

GaussianMode reduce_physical(const GaussianMode& state) {
    if (state.modes() != 2 || state.cov.rows() != 4 || state.cov.cols() != 4)
        throw std::invalid_argument("reduce_physical: expected a two-mode state");
    GaussianMode out;
    out.mean = state.mean.head(2);
    out.cov = state.cov.topLeftCorner(2, 2);
    return out;
}

PhotonStats gaussian_photon_stats(const GaussianMode& mode,
                                  const OscillatorParams& osc) {
    if (mode.modes() != 1)
        throw std::invalid_argument("gaussian_photon_stats: expected a one-mode state");
    osc.validate();
    const double mw = osc.m * osc.omega;

    // Dimensionless quadratures u = x sqrt(mw/hbar), v = p/sqrt(hbar mw),
    // [u, v] = i.
    const double suu = mode.cov(0, 0) * mw / osc.hbar;
    const double svv = mode.cov(1, 1) / (osc.hbar * mw);
    const double suv = mode.cov(0, 1) / osc.hbar;
    const double mu = mode.mean(0) * std::sqrt(mw / osc.hbar);
    const double mv = mode.mean(1) / std::sqrt(osc.hbar * mw);

    const double quad_sum = suu + svv + mu * mu + mv * mv;

    PhotonStats out;
    out.mean_n = 0.5 * (quad_sum - 1.0);

    // <(u^2+v^2)^2> by the pairing theorem; the contraction <uv><vu> of the
    // symmetrized cross terms contributes 4 suv^2 - 1.
    const double quartic = 3.0 * suu * suu + 6.0 * suu * mu * mu +
                           mu * mu * mu * mu + 3.0 * svv * svv +
                           6.0 * svv * mv * mv + mv * mv * mv * mv +
                           2.0 * suu * svv + 4.0 * suv * suv - 1.0 +
                           2.0 * suu * mv * mv + 2.0 * svv * mu * mu +
                           8.0 * mu * mv * suv + 2.0 * mu * mu * mv * mv;
    const double n2 = 0.25 * quartic - 0.5 * quad_sum + 0.25;
    out.var_n = n2 - out.mean_n * out.mean_n;
    if (std::abs(out.mean_n) <= 1e-14) {
        out.g2 = std::nullopt;
    } else {
        out.g2 = (n2 - out.mean_n) / (out.mean_n * out.mean_n);
    }
    return out;
}

std::vector<double> symplectic_eigenvalues(const GaussianMode& state) {
    const int n = static_cast<int>(state.cov.rows());
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m + 1 < n; m += 2) {
        omega(m, m + 1) = 1.0;
        omega(m + 1, m) = -1.0;
    }
    Eigen::MatrixXd prod = omega * state.cov;
    Eigen::EigenSolver<Eigen::MatrixXd> es(prod, /*computeEigenvectors=*/false);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()(i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tdsts::oracle
