#include "dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace mfw {

TimeGrid TimeGrid::make(double T, int n_t, double max_dt) {
    if (!(T > 0.0)) fail(ErrorKind::Argument, "time grid: T must be positive");
    if (n_t < 1) fail(ErrorKind::Argument, "time grid: need at least one step");
    TimeGrid tg;
    tg.n_t = n_t;
    tg.T = T;
    tg.dt = T / n_t;
    if (max_dt > 0.0 && tg.dt > max_dt * (1.0 + 1e-12))
        fail(ErrorKind::Cfl, "time grid: dt = " + std::to_string(tg.dt) +
                                 " exceeds the stability bound " + std::to_string(max_dt));
    tg.t_nodes.resize(n_t + 1);
    for (int k = 0; k <= n_t; ++k) tg.t_nodes[k] = T * k / n_t;
    tg.t_nodes.back() = T;
    return tg;
}

double cfl_dt(double r_max, double theta_max, const ModelConfig& m,
              const Grid2D& grid, double safety) {
    if (!(safety > 0.0) || safety > 1.0)
        fail(ErrorKind::Argument, "cfl: safety must lie in (0, 1]");
    if (r_max < 0.0 || theta_max < 0.0)
        fail(ErrorKind::Argument, "cfl: speed bounds must be nonnegative");

    double bound = std::numeric_limits<double>::infinity();
    double a_speed = m.z_max + 3.0 * r_max * m.A + theta_max;
    if (a_speed > 0.0) bound = std::min(bound, grid.h_a / a_speed);

    double mu_max = 0.0, sig_max = 0.0;
    for (int j = 0; j < grid.n_z; ++j) {
        mu_max = std::max(mu_max, std::abs(mu_coef(m, grid.z_nodes[j])));
        sig_max = std::max(sig_max, sigma_coef(m, grid.z_nodes[j]));
    }
    if (mu_max > 0.0) bound = std::min(bound, grid.h_z / mu_max);
    if (sig_max > 0.0) bound = std::min(bound, grid.h_z * grid.h_z / (sig_max * sig_max));

    if (!std::isfinite(bound))
        fail(ErrorKind::Argument, "cfl: all transport and diffusion coefficients vanish");
    return safety * bound;
}

double theta_bound(const CutoffSpec& cut, double gamma) {
    return -hamiltonian_derivative(0.25 * cut.W, gamma);
}

namespace {

struct AxisCoefs {
    std::vector<double> chi;      // over a nodes
    std::vector<double> mu;       // over z nodes
    std::vector<double> sigma_sq; // over z nodes
};

AxisCoefs axis_coefs(const Grid2D& g, const ModelConfig& m, const CutoffSpec& cut) {
    AxisCoefs c;
    c.chi.resize(g.n_a);
    c.mu.resize(g.n_z);
    c.sigma_sq.resize(g.n_z);
    for (int i = 0; i < g.n_a; ++i) c.chi[i] = cut.chi(g.a_nodes[i]);
    for (int j = 0; j < g.n_z; ++j) {
        c.mu[j] = mu_coef(m, g.z_nodes[j]);
        double s = sigma_coef(m, g.z_nodes[j]);
        c.sigma_sq[j] = s * s;
    }
    return c;
}

Field transport_speed_a(const Field& theta, double r_val, const AxisCoefs& c) {
    const Grid2D& g = theta.grid();
    Field speed(theta.grid_ptr());
    for (int i = 0; i < g.n_a; ++i)
        for (int j = 0; j < g.n_z; ++j)
            speed(i, j) = c.chi[i] * (g.z_nodes[j] + r_val * g.a_nodes[i] + theta(i, j));
    return speed;
}

void check_finite(const Field& u, const char* what) {
    if (!all_finite(u))
        fail(ErrorKind::Numeric, std::string("integration failure: non-finite values in ") + what);
}

} // namespace

Field step_g_forward(const Field& g_now, const Field& theta, double r_val,
                     const ModelConfig& m, const CutoffSpec& cut, double dt) {
    const Grid2D& g = g_now.grid();
    AxisCoefs c = axis_coefs(g, m, cut);

    Field speed = transport_speed_a(theta, r_val, c);
    Field adv_a = conservative_divergence_a(speed, g_now);

    Field mu_field(g_now.grid_ptr());
    Field sg(g_now.grid_ptr());
    for (int i = 0; i < g.n_a; ++i) {
        for (int j = 0; j < g.n_z; ++j) {
            mu_field(i, j) = c.mu[j];
            sg(i, j) = c.sigma_sq[j] * g_now(i, j);
        }
    }
    Field adv_z = conservative_divergence_z(mu_field, g_now);
    Field diff_z = conservative_dzz(sg);

    Field out(g_now.grid_ptr());
    for (size_t k = 0; k < out.data().size(); ++k)
        out.data()[k] = g_now.data()[k] +
                        dt * (0.5 * diff_z.data()[k] - adv_z.data()[k] - adv_a.data()[k]);
    check_finite(out, "g step");
    return out;
}

Field step_y_backward(const Field& y_next, const Field& theta, double r_val,
                      const ModelConfig& m, const CutoffSpec& cut, double dt) {
    const Grid2D& g = y_next.grid();
    AxisCoefs c = axis_coefs(g, m, cut);

    Field speed = transport_speed_a(theta, r_val, c);
    Field tau_speed(y_next.grid_ptr());
    for (size_t k = 0; k < tau_speed.data().size(); ++k)
        tau_speed.data()[k] = -speed.data()[k];
    Field ya = dda_upwind(y_next, tau_speed);

    Field yz = ddz(y_next);
    Field yzz = d2dz2(y_next);

    Field out(y_next.grid_ptr());
    for (int i = 0; i < g.n_a; ++i) {
        for (int j = 0; j < g.n_z; ++j) {
            double rhs = 0.5 * c.sigma_sq[j] * yzz(i, j) + c.mu[j] * yz(i, j) +
                         (r_val - m.rho) * y_next(i, j) + speed(i, j) * ya(i, j);
            out(i, j) = y_next(i, j) + dt * rhs;
        }
    }
    check_finite(out, "y step");
    return out;
}

ScalarPath solve_f(const ScalarPath& r_path, double rho, const TimeGrid& tg) {
    if (r_path.size() != static_cast<size_t>(tg.n_t + 1))
        fail(ErrorKind::Argument, "solve_f: r path length does not match the time grid");
    ScalarPath f(tg.n_t + 1);
    double exponent = 0.0;
    f[tg.n_t] = 1.0;
    for (int k = tg.n_t - 1; k >= 0; --k) {
        exponent += 0.5 * tg.dt * ((r_path[k] - rho) + (r_path[k + 1] - rho));
        f[k] = std::exp(exponent);
    }
    return f;
}

} // namespace mfw
