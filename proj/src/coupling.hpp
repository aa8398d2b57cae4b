#ifndef MFW_COUPLING_HPP
#define MFW_COUPLING_HPP

#include <utility>
#include <vector>

#include "dynamics.hpp"
#include "grid.hpp"
#include "model.hpp"

namespace mfw {

// One Picard iterate: both field trajectories plus the scalar paths they
// induce, all on a common time grid.
struct IterationState {
    FieldPath y_path;
    FieldPath g_path;
    ScalarPath f_path;
    ScalarPath r_path;
    ScalarPath K_path;
    int iteration = 0;
};

// Difference energies between successive iterates; total is the convergence
// metric sup_t(E_dg + E_dy) + E_df.
struct IterEnergy {
    double e_dg = 0.0; // sup_t 1/2 int (dg)^2
    double e_dy = 0.0; // sup_t 1/2 int |grad dy|^2
    double e_df = 0.0; // sup_t 1/2 |df|^2
    double total = 0.0;
};

struct IterationReport {
    bool converged = false;
    int n_iters = 0;
    std::vector<IterEnergy> energies;
    int floor_violations = 0;
    double support_extent = 0.0;   // largest |a| carrying mass/value above 1e-12
    double admissible_T = 0.0;     // A / (z_max + 3 R A + Y) with measured R, Y
    double contraction_ratio = 0.0;
    double r_max = 0.0;            // measured sup |r|
    double theta_max = 0.0;        // measured sup |Theta_c|
    double min_margin = 0.0;       // min over (t,a,z) of y + f w_inf
    double min_K = 0.0;
    double worst_mass_error = 0.0; // max over iterates and t of |mass - mass(0)|
    double worst_negative = 0.0;   // most negative g value seen
};

// Theta_c(y, f) evaluated nodewise.
Field theta_field(const Field& y, double f_val, const ModelConfig& m,
                  const CutoffSpec& cut);

// C = integral of a g.
double moment_C(const Field& g);

// Q = integral of (z + Theta_c(y, f)) g.
double moment_Q(const Field& g, const Field& y, double f_val,
                const ModelConfig& m, const CutoffSpec& cut);

// K = integral of g H_pp(psi(y + f w_inf)) (y + f w_inf).
double functional_K(const Field& y, const Field& g, double f_val,
                    const ModelConfig& m, const CutoffSpec& cut);

// The cutoff P functional: three integrals whose quotient with K yields the
// interest rate of the relaxed problem.
double functional_P(const Field& y, double f_val, const Field& g,
                    const ModelConfig& m, const CutoffSpec& cut);

// r = P/K, rejecting K below the floor K_data/2.
double interest_rate(double P_val, double K_val, double K_floor, int time_index);

// The Picard fixed-point iteration: forward g sweep, backward y sweep, f and
// r updates, all with coefficients frozen at the previous iterate.  r_init is
// the constant initial interest-rate iterate (0 in the standard scheme).
std::pair<IterationState, IterationReport> picard_solve(
    const ModelConfig& m, const TimeGrid& tg, const Field& g0, const Field& yT,
    double tol, int max_iters, double r_init = 0.0);

} // namespace mfw

#endif
