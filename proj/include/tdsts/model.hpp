#pragma once

#include <complex>
#include <vector>

namespace tdsts {

using Complex = std::complex<double>;

/// Physical constants of the one-dimensional oscillator. The defaults give
/// the dimensionless convention m = omega = hbar = kb = 1, which also covers
/// a one-mode field of the same frequency.
struct OscillatorParams {
    double m = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    double kb = 1.0;

    void validate() const;
};

/// Complex displacement amplitude alpha = re + i*im = |alpha| e^{i gamma}.
struct Displacement {
    double re = 0.0;
    double im = 0.0;

    Complex value() const { return {re, im}; }
    double mod() const;
    double arg() const;
    static Displacement polar(double mod, double arg);
    void validate() const;
};

/// Squeeze parameter z = r e^{i phi} with r >= 0 and phi in [0, 2pi).
struct Squeeze {
    double r = 0.0;
    double phi = 0.0;

    Complex z() const { return std::polar(r, phi); }
    /// Parameter of the inverse squeeze, -z = r e^{i(phi+pi)}.
    Squeeze negated() const;
    void validate() const;
};

/// Input (pre-device) and detector (post-device) noise temperatures.
/// An empty list is equivalent to a single zero temperature.
struct ThermalSpec {
    std::vector<double> input_temps;
    std::vector<double> detector_temps;

    void validate() const;
};

/// Bogoliubov angles summed over the noise lists, plus the derived factors
/// every closed-form expression consumes. Only angles are kept; no formula
/// downstream touches a temperature directly.
struct ThermalAngles {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double Theta = 0.0;          // theta1 + theta2
    double cosh_2Theta = 1.0;
    double detector_coth = 1.0;  // coth(beta2*hbar*omega/4) == exp(2*theta2)
};

/// Complete state specification: oscillator constants, displacement,
/// squeeze, and the two thermal noise lists.
struct StateSpec {
    OscillatorParams osc;
    Displacement alpha;
    Squeeze z;
    ThermalSpec thermal;

    void validate() const;
    ThermalAngles angles() const;
};

/// Time-dependent complex bookkeeping of the closed-form wavefunction.
struct Coefficients {
    Complex F1;
    Complex F2;
    Complex B;
    Complex G1;
    Complex G2;
    Complex Q;
    Complex A;  // cos(wt) + i sin(wt)
    double Theta = 0.0;
};

/// Bogoliubov angle of a single noise source, tanh(theta) = e^{-beta hw/2}.
/// T = 0 maps to theta = 0 exactly.
double thermal_angle(double temperature, const OscillatorParams& osc);

/// Same angle from the dimensionless temperature tau = kb*T/(hbar*omega).
double thermal_angle_tau(double tau);

ThermalAngles thermal_angles(const ThermalSpec& spec, const OscillatorParams& osc);

Coefficients coefficients(const StateSpec& spec, double t);

/// alpha' such that S(z) D(alpha) = D(alpha') S(z):
/// alpha' = alpha cosh(r) + conj(alpha) e^{i phi} sinh(r).
Displacement braid_displacement(const Displacement& alpha, const Squeeze& z);

}  // namespace tdsts
