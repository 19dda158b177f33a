#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tdsts/kernels.hpp"
#include "tdsts/oracle.hpp"

namespace tdsts::oracle {

namespace {
constexpr double kTaylorEps2 = 1e-32;  // squared relative term cutoff
constexpr int kTaylorMaxTerms = 96;
}  // namespace

TwoModeFockEngine::TwoModeFockEngine(int work_dim, bool parallel)
    : n_(work_dim), parallel_(parallel) {
    if (work_dim < 2) throw std::invalid_argument("work_dim must be >= 2");
    sq_.resize(static_cast<std::size_t>(n_) + 2);
    for (std::size_t i = 0; i < sq_.size(); ++i)
        sq_[i] = std::sqrt(static_cast<double>(i));
    const Eigen::Index total = static_cast<Eigen::Index>(n_) * n_;
    v_.resize(total);
    term_.resize(total);
    scratch_.resize(total);
    reset_vacuum();
}

void TwoModeFockEngine::reset_vacuum() {
    v_.setZero();
    v_(0) = Complex(1.0, 0.0);
}

double TwoModeFockEngine::squared_norm() const { return v_.squaredNorm(); }

void TwoModeFockEngine::expm_apply(const Generator& gen, double norm_bound) {
    const int substeps = std::max(1, static_cast<int>(std::ceil(norm_bound / 4.0)));
    const double inv_s = 1.0 / static_cast<double>(substeps);
    for (int step = 0; step < substeps; ++step) {
        term_ = v_;
        bool converged = false;
        for (int k = 1; k <= kTaylorMaxTerms; ++k) {
            gen(term_.data(), scratch_.data());
            term_ = scratch_ * (inv_s / static_cast<double>(k));
            v_ += term_;
            if (term_.squaredNorm() <= kTaylorEps2 * v_.squaredNorm()) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("fock engine: Taylor series did not converge");
    }
}

void TwoModeFockEngine::apply_thermal(double theta) {
    if (theta == 0.0) return;
    const double* sq = sq_.data();
    const int n = n_;
    const Complex cr(theta, 0.0);
    const Complex cl(-theta, 0.0);
    const bool par = parallel_;
    expm_apply(
        [=](const Complex* in, Complex* out) {
            if (par)
                kernels::pair_ladder_apply(in, out, n, n, sq, cr, cl);
            else
                kernels::pair_ladder_apply_ref(in, out, n, n, sq, cr, cl);
        },
        2.0 * std::abs(theta) * static_cast<double>(n + 1));
}

void TwoModeFockEngine::apply_squeeze_physical(Complex z) {
    if (z == Complex(0.0, 0.0)) return;
    const double* sq = sq_.data();
    const int n = n_;
    const Complex cr = 0.5 * z;
    const Complex cl = -0.5 * std::conj(z);
    const bool par = parallel_;
    expm_apply(
        [=](const Complex* in, Complex* out) {
            if (par)
                kernels::mode1_quadratic_apply(in, out, n, n, sq, cr, cl);
            else
                kernels::mode1_quadratic_apply_ref(in, out, n, n, sq, cr, cl);
        },
        std::abs(z) * static_cast<double>(n + 2));
}

void TwoModeFockEngine::apply_squeeze_tilde(Complex z) {
    if (z == Complex(0.0, 0.0)) return;
    const double* sq = sq_.data();
    const int n = n_;
    const Complex cr = 0.5 * std::conj(z);
    const Complex cl = -0.5 * z;
    const bool par = parallel_;
    expm_apply(
        [=](const Complex* in, Complex* out) {
            if (par)
                kernels::mode2_quadratic_apply(in, out, n, n, sq, cr, cl);
            else
                kernels::mode2_quadratic_apply_ref(in, out, n, n, sq, cr, cl);
        },
        std::abs(z) * static_cast<double>(n + 2));
}

void TwoModeFockEngine::apply_displace_physical(Complex alpha) {
    if (alpha == Complex(0.0, 0.0)) return;
    const double* sq = sq_.data();
    const int n = n_;
    const Complex cr = alpha;
    const Complex cl = -std::conj(alpha);
    const bool par = parallel_;
    expm_apply(
        [=](const Complex* in, Complex* out) {
            if (par)
                kernels::mode1_linear_apply(in, out, n, n, sq, cr, cl);
            else
                kernels::mode1_linear_apply_ref(in, out, n, n, sq, cr, cl);
        },
        2.0 * std::abs(alpha) * std::sqrt(static_cast<double>(n + 1)));
}

void TwoModeFockEngine::apply_displace_tilde(Complex alpha) {
    if (alpha == Complex(0.0, 0.0)) return;
    const double* sq = sq_.data();
    const int n = n_;
    const Complex cr = std::conj(alpha);
    const Complex cl = -alpha;
    const bool par = parallel_;
    expm_apply(
        [=](const Complex* in, Complex* out) {
            if (par)
                kernels::mode2_linear_apply(in, out, n, n, sq, cr, cl);
            else
                kernels::mode2_linear_apply_ref(in, out, n, n, sq, cr, cl);
        },
        2.0 * std::abs(alpha) * std::sqrt(static_cast<double>(n + 1)));
}

void TwoModeFockEngine::free_evolution(double omega_t) {
    if (omega_t == 0.0) return;
    if (parallel_)
        kernels::phase_rotation_apply(v_.data(), n_, n_, omega_t);
    else
        kernels::phase_rotation_apply_ref(v_.data(), n_, n_, omega_t);
}

FockState TwoModeFockEngine::project(int cutoff) const {
    if (cutoff + 1 > n_)
        throw std::invalid_argument("project: cutoff exceeds the working space");
    FockState out;
    out.cutoff = cutoff;
    const int dim = cutoff + 1;
    out.amplitudes.resize(static_cast<Eigen::Index>(dim) * dim);
    double kept = 0.0;
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
            const Complex a = v_(static_cast<Eigen::Index>(j) * n_ + k);
            out.amplitudes(static_cast<Eigen::Index>(j) * dim + k) = a;
            kept += std::norm(a);
        }
    out.norm_deficit = 1.0 - kept;
    return out;
}

FockState fock_tfd_state(const StateSpec& spec, double t, int cutoff) {
    const int pad = std::max(16, (3 * cutoff) / 10);
    return fock_tfd_state(spec, t, cutoff, cutoff + 1 + pad, true);
}

FockState fock_tfd_state(const StateSpec& spec, double t, int cutoff,
                         int work_dim, bool parallel) {
    spec.validate();
    if (!std::isfinite(t)) throw std::domain_error("fock_tfd_state: t must be finite");
    if (cutoff < 8) throw std::domain_error("fock_tfd_state: cutoff must be >= 8");
    if (work_dim < cutoff + 1)
        throw std::invalid_argument("fock_tfd_state: work_dim must cover the cutoff");

    const ThermalAngles ang = spec.angles();
    TwoModeFockEngine engine(work_dim, parallel);
    engine.apply_thermal(ang.theta1);
    engine.apply_squeeze_physical(spec.z.z());
    engine.apply_squeeze_tilde(spec.z.z());
    engine.apply_displace_physical(spec.alpha.value());
    engine.apply_displace_tilde(spec.alpha.value());
    engine.apply_thermal(ang.theta2);
    engine.free_evolution(spec.osc.omega * t);

    FockState out = engine.project(cutoff);
    if (out.norm_deficit > 1e-6)
        throw NonConvergence(
            "fock_tfd_state: norm deficit " + std::to_string(out.norm_deficit) +
                " at cutoff " + std::to_string(cutoff) +
                "; increase the cutoff",
            out.norm_deficit, cutoff);
    return out;
}

FockExpectations fock_expectations(const FockState& state,
                                   const OscillatorParams& osc) {
    osc.validate();
    const int dim = state.dim();
    const auto& v = state.amplitudes;
    if (v.size() != static_cast<Eigen::Index>(dim) * dim)
        throw std::invalid_argument("fock_expectations: tensor size mismatch");

    double nrm = 0.0, sn = 0.0, sn2 = 0.0;
    Complex sa(0.0, 0.0), sa2(0.0, 0.0);
    for (int j = 0; j < dim; ++j) {
        const Eigen::Index row = static_cast<Eigen::Index>(j) * dim;
        for (int k = 0; k < dim; ++k) {
            const double p = std::norm(v(row + k));
            nrm += p;
            sn += j * p;
            sn2 += static_cast<double>(j) * j * p;
            if (j + 1 < dim)
                sa += std::conj(v(row + k)) * std::sqrt(j + 1.0) * v(row + dim + k);
            if (j + 2 < dim)
                sa2 += std::conj(v(row + k)) *
                       std::sqrt((j + 1.0) * (j + 2.0)) * v(row + 2 * dim + k);
        }
    }
    if (nrm <= 0.0) throw std::invalid_argument("fock_expectations: empty state");

    const double cx = std::sqrt(0.5 * osc.hbar / (osc.m * osc.omega));
    const double cp = std::sqrt(0.5 * osc.m * osc.hbar * osc.omega);

    FockExpectations out;
    out.x = 2.0 * cx * sa.real() / nrm;
    out.p = 2.0 * cp * sa.imag() / nrm;
    out.x2 = cx * cx * (2.0 * sa2.real() + 2.0 * sn + nrm) / nrm;
    out.p2 = cp * cp * (-2.0 * sa2.real() + 2.0 * sn + nrm) / nrm;
    out.n = sn / nrm;
    out.n2 = sn2 / nrm;
    return out;
}

std::vector<double> hermite_functions(double xi, int n_max) {
    std::vector<double> h(static_cast<std::size_t>(n_max) + 1);
    const double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi);
    h[0] = h0;
    if (n_max >= 1) h[1] = std::numbers::sqrt2 * xi * h0;
    for (int n = 1; n < n_max; ++n)
        h[static_cast<std::size_t>(n) + 1] =
            std::sqrt(2.0 / (n + 1.0)) * xi * h[static_cast<std::size_t>(n)] -
            std::sqrt(n / (n + 1.0)) * h[static_cast<std::size_t>(n) - 1];
    return h;
}

Complex wavefunction_from_fock(const FockState& state,
                               const OscillatorParams& osc, double x,
                               double x_tilde, bool* tail_warning) {
    osc.validate();
    const double scale = std::sqrt(osc.m * osc.omega / osc.hbar);
    const double xi = x * scale;
    const double xit = x_tilde * scale;
    const double allowed = std::sqrt(2.0 * static_cast<double>(state.cutoff));
    if (tail_warning)
        *tail_warning = std::abs(xi) > allowed || std::abs(xit) > allowed;

    const int dim = state.dim();
    const auto h1 = hermite_functions(xi, state.cutoff);
    const auto h2 = hermite_functions(xit, state.cutoff);
    Complex acc(0.0, 0.0);
    for (int j = 0; j < dim; ++j) {
        const Eigen::Index row = static_cast<Eigen::Index>(j) * dim;
        Complex inner(0.0, 0.0);
        for (int k = 0; k < dim; ++k)
            inner += state.amplitudes(row + k) * h2[static_cast<std::size_t>(k)];
        acc += h1[static_cast<std::size_t>(j)] * inner;
    }
    return scale * acc;
}

Complex overlap(const FockState& lhs, const FockState& rhs) {
    if (lhs.cutoff != rhs.cutoff)
        throw std::invalid_argument("overlap: cutoffs differ");
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < lhs.amplitudes.size(); ++i)
        acc += std::conj(lhs.amplitudes(i)) * rhs.amplitudes(i);
    return acc;
}

}  // namespace tdsts::oracle
