#ifndef MFW_GRID_HPP
#define MFW_GRID_HPP

#include <memory>
#include <vector>

namespace mfw {

// Uniform tensor grid on D = [-3A, 3A] x [z_min, z_max].
struct Grid2D {
    int n_a = 0;
    int n_z = 0;
    double a_min = 0.0, a_max = 0.0;
    double z_min = 0.0, z_max = 0.0;
    double h_a = 0.0, h_z = 0.0;
    std::vector<double> a_nodes;
    std::vector<double> z_nodes;

    static std::shared_ptr<const Grid2D> make(double A, double z_min,
                                              double z_max, int n_a, int n_z);

    // Trapezoid weights; these equal the dual-cell widths used by the
    // conservative divergences, which is what makes mass telescoping exact.
    double weight_a(int i) const { return (i == 0 || i == n_a - 1) ? 0.5 * h_a : h_a; }
    double weight_z(int j) const { return (j == 0 || j == n_z - 1) ? 0.5 * h_z : h_z; }
};

// Real-valued function sampled on a Grid2D, stored row-major in a.
class Field {
public:
    Field() = default;
    explicit Field(std::shared_ptr<const Grid2D> grid, double fill = 0.0)
        : grid_(std::move(grid)),
          v_(static_cast<size_t>(grid_->n_a) * grid_->n_z, fill) {}

    double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * grid_->n_z + j]; }
    double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * grid_->n_z + j]; }

    int na() const { return grid_->n_a; }
    int nz() const { return grid_->n_z; }
    const Grid2D& grid() const { return *grid_; }
    const std::shared_ptr<const Grid2D>& grid_ptr() const { return grid_; }
    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }
    bool empty() const { return v_.empty(); }

private:
    std::shared_ptr<const Grid2D> grid_;
    std::vector<double> v_;
};

// Tensor-product trapezoid rule over D.
double integrate(const Field& u);

// Central differences in z, second order; one-sided second-order at the
// z boundaries.
Field ddz(const Field& u);
Field d2dz2(const Field& u);

// Same stencils in a (used by norms and difference energies).
Field dda(const Field& u);
Field d2da2(const Field& u);

// First-order upwind d/da, stencil direction chosen pointwise by the sign
// of speed; backward at speed == 0; one-sided at the a boundaries.
Field dda_upwind(const Field& u, const Field& speed);

// Conservative flux-difference divergences on the dual-cell mesh.  Interface
// fluxes use upwind reconstruction (transport) or centered differences
// (diffusion); boundary interface fluxes are zero, so the quadrature-weighted
// sum of every divergence vanishes identically.
Field conservative_divergence_a(const Field& speed, const Field& density);
Field conservative_divergence_z(const Field& speed, const Field& density);
// Flux form of d^2/dz^2 applied to a nodal field x (e.g. x = sigma^2 * g).
Field conservative_dzz(const Field& x);

// Bilinear interpolation; coordinates are clamped to the domain box.
double interp_bilinear(const Field& u, double a, double z);

bool all_finite(const Field& u);

// Largest |a_i| over nodes where max_z |u| exceeds the threshold; 0 when the
// field is below threshold everywhere.
double support_extent_a(const Field& u, double threshold);

} // namespace mfw

#endif
