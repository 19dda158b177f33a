#pragma once

#include <optional>

#include "tdsts/model.hpp"

namespace tdsts {

/// First and second moments of position and momentum at time t.
struct XPMoments {
    double mean_x = 0.0;
    double var_x = 0.0;
    double mean_p = 0.0;
    double var_p = 0.0;
    double t = 0.0;
};

/// Photon-number statistics; time-independent by construction. g2 is absent
/// for the exact vacuum (mean_n = 0).
struct PhotonStats {
    double mean_n = 0.0;
    double var_n = 0.0;
    std::optional<double> g2;
};

struct QuadratureVariances {
    double dy1_sq = 0.0;
    double dy2_sq = 0.0;
};

enum class Observable { position, momentum };

/// Two-argument coordinate wavefunction of the doubled system,
/// psi(x_tilde, x; t). Units: 1/length.
Complex wavefunction(const StateSpec& spec, double x, double x_tilde, double t);

/// Position density-matrix element rho_{x',x}(t) = <x| rho |x'>.
Complex rho_position(const StateSpec& spec, double x_prime, double x, double t);

/// Closed form of the same element for zero detector temperature at t = 0;
/// used as the reduction target in tests. Requires theta2 == 0.
Complex dsts_rho_position(const StateSpec& spec, double x_prime, double x);

/// Marginal probability densities (Gaussian).
double prob_x(const StateSpec& spec, double x, double t);
double prob_p(const StateSpec& spec, double p, double t);

XPMoments xp_moments(const StateSpec& spec, double t);

/// Standard-deviation product Delta x * Delta p; always >= (hbar/2) cosh 2Theta.
double uncertainty_product(const StateSpec& spec, double t);

/// Sum of the position and momentum information entropies,
/// equals ln(2 pi e Delta x Delta p).
double entropy_sum(const StateSpec& spec, double t);

/// Variances of the rotated quadrature phase operators at rotation varphi.
QuadratureVariances quadrature_variances(const StateSpec& spec, double t,
                                         double varphi);

/// Moment generating function exp{lambda <u> + lambda^2 (Delta u)^2 / 2}.
double mgf(const StateSpec& spec, Observable which, double lambda, double t);

/// n-th raw moment of position or momentum via the Gaussian pairing
/// recursion; n = 0 gives 1, n = 1 the mean, n = 2 var + mean^2.
double nth_moment(const StateSpec& spec, Observable which, int n, double t);

PhotonStats photon_stats(const StateSpec& spec);

}  // namespace tdsts
