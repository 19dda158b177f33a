#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tdsts/analytic.hpp"
#include "tdsts/model.hpp"

namespace tdsts::oracle {

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

class IntegrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Composite Simpson integral of f over [center - k*sigma, center + k*sigma].
/// points must be odd and >= 101, halfwidth_sigmas >= 8. Non-finite values of
/// f raise IntegrationError.
double quad_integrate(const std::function<double(double)>& f, double center,
                      double sigma, double halfwidth_sigmas, int points);

// ---------------------------------------------------------------------------
// Gaussian covariance-matrix simulator
// ---------------------------------------------------------------------------

/// Mean vector and symmetrized covariance matrix of one or two bosonic
/// modes, quadrature ordering (x, p) per mode. For the doubled system the
/// tilde mode is stored with the momentum sign flipped relative to the
/// tilde-conjugation convention, which makes both modes obey the standard
/// commutator; only physical-mode reductions are observable.
struct GaussianMode {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;

    int modes() const { return static_cast<int>(mean.size()) / 2; }
};

/// Two-mode state after the full circuit: thermal mixing (input angle),
/// squeeze on both modes (tilde coefficients conjugated), displacement on
/// both modes (tilde conjugated), thermal mixing (detector angle), then free
/// evolution for time t.
GaussianMode gaussian_tfd_state(const StateSpec& spec, double t);

/// Partial trace onto the physical mode (leading 2x2 block).
GaussianMode reduce_physical(const GaussianMode& state);

/// Photon statistics of a one-mode Gaussian state via the moment pairing
/// theorem applied to the quartic combination of x and p.
PhotonStats gaussian_photon_stats(const GaussianMode& mode,
                                  const OscillatorParams& osc);

/// Symplectic spectrum of the covariance matrix; every entry must be
/// >= hbar/2 for a physical state.
std::vector<double> symplectic_eigenvalues(const GaussianMode& state);

// ---------------------------------------------------------------------------
// Truncated Fock-space simulator
// ---------------------------------------------------------------------------

class NonConvergence : public std::runtime_error {
  public:
    NonConvergence(const std::string& msg, double deficit, int cutoff)
        : std::runtime_error(msg), deficit(deficit), cutoff(cutoff) {}
    double deficit;
    int cutoff;
};

/// Two-mode amplitude tensor truncated at `cutoff` photons per mode,
/// index = j*(cutoff+1) + k with j the physical mode. norm_deficit is the
/// weight of the state outside the stored tensor.
struct FockState {
    int cutoff = 0;
    Eigen::VectorXcd amplitudes;
    double norm_deficit = 0.0;

    int dim() const { return cutoff + 1; }
    bool converged() const { return norm_deficit <= 1e-10; }
};

/// Gate-level engine. Gates are applied to the state vector by scaled Taylor
/// series of the banded generators on a working space larger than the
/// reported cutoff, so the projection deficit measures real truncation.
class TwoModeFockEngine {
  public:
    explicit TwoModeFockEngine(int work_dim, bool parallel = true);

    void reset_vacuum();
    /// exp{theta (a+ b+ - a b)} — two-mode thermal mixing.
    void apply_thermal(double theta);
    /// exp{(z a+a+ - z* a a)/2} on the physical mode.
    void apply_squeeze_physical(Complex z);
    /// Tilde-conjugated squeeze, exp{(z* b+b+ - z b b)/2}.
    void apply_squeeze_tilde(Complex z);
    /// exp{alpha a+ - alpha* a} on the physical mode.
    void apply_displace_physical(Complex alpha);
    /// Tilde-conjugated displacement, exp{alpha* b+ - alpha b}.
    void apply_displace_tilde(Complex alpha);
    /// exp{-i wt (n_a - n_b)} — exact diagonal phase.
    void free_evolution(double omega_t);

    int work_dim() const { return n_; }
    const Eigen::VectorXcd& state() const { return v_; }
    double squared_norm() const;
    FockState project(int cutoff) const;

  private:
    using Generator = std::function<void(const Complex*, Complex*)>;
    void expm_apply(const Generator& gen, double norm_bound);

    int n_;
    bool parallel_;
    std::vector<double> sq_;
    Eigen::VectorXcd v_, term_, scratch_;
};

/// Full circuit at the given cutoff (>= 8). Throws NonConvergence when the
/// projection misses more than 1e-6 of the norm.
FockState fock_tfd_state(const StateSpec& spec, double t, int cutoff);
FockState fock_tfd_state(const StateSpec& spec, double t, int cutoff,
                         int work_dim, bool parallel);

struct FockExpectations {
    double x = 0.0;
    double p = 0.0;
    double x2 = 0.0;
    double p2 = 0.0;
    double n = 0.0;
    double n2 = 0.0;
};

/// Physical-mode expectations, tilde mode summed over.
FockExpectations fock_expectations(const FockState& state,
                                   const OscillatorParams& osc);

/// Oscillator eigenfunctions phi_n in unit scale: h[n](xi) with
/// phi_n(x) = (m w/hbar)^{1/4} h_n(x sqrt(m w/hbar)); stable upward
/// recurrence.
std::vector<double> hermite_functions(double xi, int n_max);

/// Wavefunction reconstruction sum_{j,k} amp[j,k] phi_j(x) phi_k(x_tilde).
/// Sets *tail_warning when an argument lies beyond the classically allowed
/// region of the highest retained level.
Complex wavefunction_from_fock(const FockState& state,
                               const OscillatorParams& osc, double x,
                               double x_tilde, bool* tail_warning = nullptr);

/// <lhs|rhs> for states with equal cutoff.
Complex overlap(const FockState& lhs, const FockState& rhs);

}  // namespace tdsts::oracle
