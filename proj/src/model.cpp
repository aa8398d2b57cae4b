#include "model.hpp"

#include <cmath>

#include "errors.hpp"

namespace mfw {

void ModelConfig::validate() const {
    if (!(rho > 0.0)) fail(ErrorKind::Argument, "model: rho must be positive");
    if (!(w_inf > 0.0)) fail(ErrorKind::Argument, "model: w_inf must be positive");
    if (!(gamma > 0.0) || gamma == 1.0)
        fail(ErrorKind::Argument, "model: gamma must be positive and != 1");
    if (!(T > 0.0)) fail(ErrorKind::Argument, "model: T must be positive");
    if (!(A > 0.0)) fail(ErrorKind::Argument, "model: A must be positive");
    if (!(z_min < z_max)) fail(ErrorKind::Argument, "model: z_min must be below z_max");
    if (sigma_bar < 0.0) fail(ErrorKind::Argument, "model: sigma_bar must be >= 0");
}

namespace {

inline void require_positive(double p) {
    if (!(p > 0.0))
        fail(ErrorKind::Argument, "Hamiltonian quantities are defined for p > 0 only");
}

// p^e with fast paths for the CRRA exponents that dominate the hot loops.
inline double pow_fast(double p, double e) {
    if (e == -0.5) return 1.0 / std::sqrt(p);
    if (e == -1.5) return 1.0 / (p * std::sqrt(p));
    return std::pow(p, e);
}

} // namespace

double marginal_utility_inverse(double p, double gamma) {
    require_positive(p);
    return pow_fast(p, -1.0 / gamma);
}

double hamiltonian(double p, double gamma) {
    require_positive(p);
    return gamma / (1.0 - gamma) * std::pow(p, (gamma - 1.0) / gamma);
}

double hamiltonian_derivative(double p, double gamma) {
    require_positive(p);
    return -pow_fast(p, -1.0 / gamma);
}

double hamiltonian_second_derivative(double p, double gamma) {
    require_positive(p);
    return pow_fast(p, -1.0 / gamma - 1.0) / gamma;
}

double sigma_coef(const ModelConfig& m, double z) {
    if (z < m.z_min || z > m.z_max)
        fail(ErrorKind::Argument, "sigma: z outside [z_min, z_max]");
    double half = 0.5 * (m.z_max - m.z_min);
    // (z - z_min)(z_max - z) peaks at the midpoint with value half^2
    return m.sigma_bar * (z - m.z_min) * (m.z_max - z) / (half * half);
}

double mu_coef(const ModelConfig& m, double z) {
    if (z < m.z_min || z > m.z_max)
        fail(ErrorKind::Argument, "mu: z outside [z_min, z_max]");
    double w = m.z_max - m.z_min;
    double z_mid = 0.5 * (m.z_min + m.z_max);
    // max of |(1/2 - s) s (1 - s)| on [0,1] is sqrt(3)/36
    double norm = w * w * w * std::sqrt(3.0) / 36.0;
    return m.kappa * (z_mid - z) * (z - m.z_min) * (m.z_max - z) / norm;
}

namespace {

// C^2 smoothstep: 0 at 0 and 1 at 1 with two vanishing derivatives at both ends.
inline double smoothstep2(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

} // namespace

double CutoffSpec::chi(double a) const {
    double r = std::abs(a);
    if (r <= 2.0 * A) return 1.0;
    if (r >= 3.0 * A) return 0.0;
    return 1.0 - smoothstep2((r - 2.0 * A) / A);
}

double CutoffSpec::psi(double x) const {
    const double lo = 0.25 * W;
    const double hi = 0.5 * W;
    if (x >= hi) return x;
    if (x <= lo) return lo;
    // quintic blend q(s) = 6s^3 - 8s^4 + 3s^5: value/slope/curvature match the
    // constant branch at s=0 and the identity branch at s=1; q' >= 0 throughout
    double s = (x - lo) / (hi - lo);
    double q = s * s * s * (6.0 + s * (-8.0 + 3.0 * s));
    return lo + (hi - lo) * q;
}

double theta_cutoff(double y_value, double f_value, const ModelConfig& m,
                    const CutoffSpec& cut) {
    return hamiltonian_derivative(cut.psi(y_value + f_value * m.w_inf), m.gamma);
}

CutoffSpec compute_floors(const Field& g0, const Field& yT, const ModelConfig& m) {
    const Grid2D& g = g0.grid();
    double W = yT(0, 0) + m.w_inf;
    for (int i = 0; i < g.n_a; ++i)
        for (int j = 0; j < g.n_z; ++j)
            W = std::min(W, yT(i, j) + m.w_inf);
    if (!(W > 0.0))
        fail(ErrorKind::DataRejected,
             "data rejected: min(y_T + w_inf) <= 0, positivity floor W must be positive");

    Field integrand(g0.grid_ptr());
    for (int i = 0; i < g.n_a; ++i) {
        for (int j = 0; j < g.n_z; ++j) {
            double arg = yT(i, j) + m.w_inf;
            integrand(i, j) = g0(i, j) * hamiltonian_second_derivative(arg, m.gamma) * arg;
        }
    }
    CutoffSpec cut;
    cut.A = m.A;
    cut.W = W;
    cut.K_floor = 0.5 * integrate(integrand);
    return cut;
}

} // namespace mfw
