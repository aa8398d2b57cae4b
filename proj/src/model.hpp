#ifndef MFW_MODEL_HPP
#define MFW_MODEL_HPP

#include "grid.hpp"

namespace mfw {

// Continuous-model parameters.  Utility is CRRA, u(c) = c^(1-gamma)/(1-gamma),
// so u' maps (0,inf) onto (0,inf) and all Hamiltonian quantities below have
// closed forms.
struct ModelConfig {
    double rho = 0.05;      // discount rate
    double w_inf = 1.0;     // positive shift constant in y = da_v - f(t) w_inf
    double gamma = 2.0;     // CRRA exponent, > 0 and != 1
    double T = 0.1;         // time horizon
    double A = 1.0;         // data support half-width; domain is [-3A, 3A]
    double z_min = 0.5;
    double z_max = 1.5;
    double sigma_bar = 0.1; // diffusion amplitude
    double kappa = 0.1;     // drift amplitude

    void validate() const;
};

// (u')^{-1}(p) = p^(-1/gamma), defined for p > 0.
double marginal_utility_inverse(double p, double gamma);

// H(p) = -p (u')^{-1}(p) + u((u')^{-1}(p)) = gamma/(1-gamma) p^((gamma-1)/gamma).
double hamiltonian(double p, double gamma);

// H_p(p) = -(u')^{-1}(p) = -p^(-1/gamma); always negative.
double hamiltonian_derivative(double p, double gamma);

// H_pp(p) = (1/gamma) p^(-1/gamma - 1); always positive.
double hamiltonian_second_derivative(double p, double gamma);

// Diffusion and drift coefficients in z.  Both vanish at z_min and z_max so
// nothing is transported or diffused through the z boundary.  Shapes are
// polynomials normalized to unit peak, scaled by sigma_bar and kappa.
double sigma_coef(const ModelConfig& m, double z);
double mu_coef(const ModelConfig& m, double z);

// Cutoff data: chi truncates the wealth transport speed outside [-2A, 2A],
// psi floors the Hamiltonian argument at W/4, and K_floor = K_data/2 is the
// smallest admissible value of the coupling functional K.
struct CutoffSpec {
    double A = 0.0;
    double W = 0.0;
    double K_floor = 0.0;

    // 1 on [-2A, 2A], 0 outside [-3A, 3A], C^2 monotone in between.
    double chi(double a) const;
    // Identity above W/2, constant W/4 below W/4, C^2 monotone blend between.
    double psi(double x) const;
};

// Theta_c(y, f) = H_p(psi(y + f w_inf)); psi keeps the argument positive, and
// Theta_c equals the uncutoff H_p(y + f w_inf) whenever y + f w_inf >= W/2.
double theta_cutoff(double y_value, double f_value, const ModelConfig& m,
                    const CutoffSpec& cut);

// W = min over D of (yT + w_inf) and K_data from the data; rejects W <= 0.
CutoffSpec compute_floors(const Field& g0, const Field& yT, const ModelConfig& m);

} // namespace mfw

#endif
