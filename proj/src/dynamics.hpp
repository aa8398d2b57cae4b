#ifndef MFW_DYNAMICS_HPP
#define MFW_DYNAMICS_HPP

#include <utility>
#include <vector>

#include "grid.hpp"
#include "model.hpp"

namespace mfw {

using ScalarPath = std::vector<double>; // one value per time node

struct TimeGrid {
    int n_t = 0; // step count; there are n_t + 1 nodes
    double T = 0.0;
    double dt = 0.0;
    std::vector<double> t_nodes;

    // max_dt > 0 enforces the stability bound at construction.
    static TimeGrid make(double T, int n_t, double max_dt = 0.0);
};

struct FieldPath {
    std::vector<Field> fields; // n_t + 1 entries

    Field& operator[](size_t k) { return fields[k]; }
    const Field& operator[](size_t k) const { return fields[k]; }
    size_t size() const { return fields.size(); }
};

// Explicit-step stability bound
//   dt = safety * min( h_a / (z_max + 3 r_max A + theta_max),
//                      h_z / max|mu|, h_z^2 / max sigma^2 ).
// Terms with vanishing coefficients impose no constraint; throws when every
// term is degenerate (nothing moves, no admissible dt exists).
double cfl_dt(double r_max, double theta_max, const ModelConfig& m,
              const Grid2D& grid, double safety);

// A-priori bound on |Theta_c| implied by the psi floor: the argument of H_p
// is at least W/4, so |Theta_c| <= |H_p(W/4)|.
double theta_bound(const CutoffSpec& cut, double gamma);

// One explicit Euler step of the forward transport-diffusion equation for g:
//   dg/dt = 1/2 dzz(sigma^2 g) - dz(mu g) - da(chi (z + r a + theta) g),
// every spatial term in conservative flux form, so the quadrature mass of the
// output equals the mass of the input to machine precision.  theta is the
// frozen coefficient field Theta_c(y^n, f^n) at this time node.
Field step_g_forward(const Field& g_now, const Field& theta, double r_val,
                     const ModelConfig& m, const CutoffSpec& cut, double dt);

// One explicit Euler step of the backward equation for y, marched in
// tau = T - t (so the zz term diffuses forward in tau):
//   dy/dtau = 1/2 sigma^2 dzz y + mu dz y + (r - rho) y + c_a da y,
//   c_a = chi (z + r a + theta),
// with the a-advection upwinded against the tau-direction speed -c_a.  theta
// is a frozen coefficient field, which makes the step linear in y.
Field step_y_backward(const Field& y_next, const Field& theta, double r_val,
                      const ModelConfig& m, const CutoffSpec& cut, double dt);

// f(t) = exp( integral_t^T (r - rho) dt' ) by trapezoid quadrature; f(T) = 1.
ScalarPath solve_f(const ScalarPath& r_path, double rho, const TimeGrid& tg);

} // namespace mfw

#endif
