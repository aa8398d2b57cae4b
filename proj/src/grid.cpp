#include "grid.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace mfw {

std::shared_ptr<const Grid2D> Grid2D::make(double A, double z_min, double z_max,
                                           int n_a, int n_z) {
    if (!(A > 0.0)) fail(ErrorKind::Argument, "grid: A must be positive");
    if (!(z_min < z_max)) fail(ErrorKind::Argument, "grid: z_min must be below z_max");
    if (n_a < 16 || n_z < 16) fail(ErrorKind::Argument, "grid: need at least 16 nodes per axis");

    auto g = std::make_shared<Grid2D>();
    g->n_a = n_a;
    g->n_z = n_z;
    g->a_min = -3.0 * A;
    g->a_max = 3.0 * A;
    g->z_min = z_min;
    g->z_max = z_max;
    g->h_a = 6.0 * A / (n_a - 1);
    g->h_z = (z_max - z_min) / (n_z - 1);
    g->a_nodes.resize(n_a);
    g->z_nodes.resize(n_z);
    for (int i = 0; i < n_a; ++i) g->a_nodes[i] = g->a_min + i * g->h_a;
    for (int j = 0; j < n_z; ++j) g->z_nodes[j] = z_min + j * g->h_z;
    g->a_nodes.front() = g->a_min;
    g->a_nodes.back() = g->a_max;
    g->z_nodes.front() = z_min;
    g->z_nodes.back() = z_max;
    return g;
}

double integrate(const Field& u) {
    const Grid2D& g = u.grid();
    double total = 0.0;
    for (int i = 0; i < g.n_a; ++i) {
        const double wa = g.weight_a(i);
        double row = 0.0;
        for (int j = 0; j < g.n_z; ++j) row += g.weight_z(j) * u(i, j);
        total += wa * row;
    }
    return total;
}

Field ddz(const Field& u) {
    const Grid2D& g = u.grid();
    Field out(u.grid_ptr());
    const double ih = 1.0 / (2.0 * g.h_z);
    for (int i = 0; i < g.n_a; ++i) {
        out(i, 0) = (-3.0 * u(i, 0) + 4.0 * u(i, 1) - u(i, 2)) * ih;
        for (int j = 1; j < g.n_z - 1; ++j)
            out(i, j) = (u(i, j + 1) - u(i, j - 1)) * ih;
        int m = g.n_z - 1;
        out(i, m) = (3.0 * u(i, m) - 4.0 * u(i, m - 1) + u(i, m - 2)) * ih;
    }
    return out;
}

Field d2dz2(const Field& u) {
    const Grid2D& g = u.grid();
    Field out(u.grid_ptr());
    const double ih2 = 1.0 / (g.h_z * g.h_z);
    for (int i = 0; i < g.n_a; ++i) {
        out(i, 0) = (2.0 * u(i, 0) - 5.0 * u(i, 1) + 4.0 * u(i, 2) - u(i, 3)) * ih2;
        for (int j = 1; j < g.n_z - 1; ++j)
            out(i, j) = (u(i, j + 1) - 2.0 * u(i, j) + u(i, j - 1)) * ih2;
        int m = g.n_z - 1;
        out(i, m) = (2.0 * u(i, m) - 5.0 * u(i, m - 1) + 4.0 * u(i, m - 2) - u(i, m - 3)) * ih2;
    }
    return out;
}

Field dda(const Field& u) {
    const Grid2D& g = u.grid();
    Field out(u.grid_ptr());
    const double ih = 1.0 / (2.0 * g.h_a);
    for (int j = 0; j < g.n_z; ++j) {
        out(0, j) = (-3.0 * u(0, j) + 4.0 * u(1, j) - u(2, j)) * ih;
        int m = g.n_a - 1;
        out(m, j) = (3.0 * u(m, j) - 4.0 * u(m - 1, j) + u(m - 2, j)) * ih;
    }
    for (int i = 1; i < g.n_a - 1; ++i)
        for (int j = 0; j < g.n_z; ++j)
            out(i, j) = (u(i + 1, j) - u(i - 1, j)) * ih;
    return out;
}

Field d2da2(const Field& u) {
    const Grid2D& g = u.grid();
    Field out(u.grid_ptr());
    const double ih2 = 1.0 / (g.h_a * g.h_a);
    for (int j = 0; j < g.n_z; ++j) {
        out(0, j) = (2.0 * u(0, j) - 5.0 * u(1, j) + 4.0 * u(2, j) - u(3, j)) * ih2;
        int m = g.n_a - 1;
        out(m, j) = (2.0 * u(m, j) - 5.0 * u(m - 1, j) + 4.0 * u(m - 2, j) - u(m - 3, j)) * ih2;
    }
    for (int i = 1; i < g.n_a - 1; ++i)
        for (int j = 0; j < g.n_z; ++j)
            out(i, j) = (u(i + 1, j) - 2.0 * u(i, j) + u(i - 1, j)) * ih2;
    return out;
}

Field dda_upwind(const Field& u, const Field& speed) {
    const Grid2D& g = u.grid();
    Field out(u.grid_ptr());
    const double ih = 1.0 / g.h_a;
    for (int i = 0; i < g.n_a; ++i) {
        for (int j = 0; j < g.n_z; ++j) {
            if (i == 0) {
                out(i, j) = (u(1, j) - u(0, j)) * ih;
            } else if (i == g.n_a - 1) {
                out(i, j) = (u(i, j) - u(i - 1, j)) * ih;
            } else if (speed(i, j) < 0.0) {
                out(i, j) = (u(i + 1, j) - u(i, j)) * ih;
            } else {
                // speed >= 0, including the zero-speed tie: backward stencil
                out(i, j) = (u(i, j) - u(i - 1, j)) * ih;
            }
        }
    }
    return out;
}

namespace {

// Dual-cell divergence from interface fluxes: interior cells have width h,
// the two boundary cells width h/2, and the outer interface flux is zero.
// flux_at(k) must return the flux through interface k+1/2, k = 0..n-2.
template <typename FluxFn>
inline void divergence_1d(int n, double h, FluxFn flux_at, double* out, int stride) {
    double left = 0.0; // boundary interface
    for (int k = 0; k < n - 1; ++k) {
        double right = flux_at(k);
        double width = (k == 0) ? 0.5 * h : h;
        out[k * stride] = (right - left) / width;
        left = right;
    }
    out[(n - 1) * stride] = (0.0 - left) / (0.5 * h);
}

} // namespace

Field conservative_divergence_a(const Field& speed, const Field& density) {
    const Grid2D& g = density.grid();
    Field out(density.grid_ptr());
    for (int j = 0; j < g.n_z; ++j) {
        auto flux = [&](int i) {
            double c = 0.5 * (speed(i, j) + speed(i + 1, j));
            return c >= 0.0 ? c * density(i, j) : c * density(i + 1, j);
        };
        divergence_1d(g.n_a, g.h_a, flux, &out.data()[j], g.n_z);
    }
    return out;
}

Field conservative_divergence_z(const Field& speed, const Field& density) {
    const Grid2D& g = density.grid();
    Field out(density.grid_ptr());
    for (int i = 0; i < g.n_a; ++i) {
        auto flux = [&](int j) {
            double c = 0.5 * (speed(i, j) + speed(i, j + 1));
            return c >= 0.0 ? c * density(i, j) : c * density(i, j + 1);
        };
        divergence_1d(g.n_z, g.h_z, flux, &out.data()[static_cast<size_t>(i) * g.n_z], 1);
    }
    return out;
}

Field conservative_dzz(const Field& x) {
    const Grid2D& g = x.grid();
    Field out(x.grid_ptr());
    const double ih = 1.0 / g.h_z;
    for (int i = 0; i < g.n_a; ++i) {
        auto flux = [&](int j) { return (x(i, j + 1) - x(i, j)) * ih; };
        divergence_1d(g.n_z, g.h_z, flux, &out.data()[static_cast<size_t>(i) * g.n_z], 1);
    }
    return out;
}

double interp_bilinear(const Field& u, double a, double z) {
    const Grid2D& g = u.grid();
    double sa = (a - g.a_min) / g.h_a;
    double sz = (z - g.z_min) / g.h_z;
    sa = std::clamp(sa, 0.0, static_cast<double>(g.n_a - 1));
    sz = std::clamp(sz, 0.0, static_cast<double>(g.n_z - 1));
    int i = std::min(static_cast<int>(sa), g.n_a - 2);
    int j = std::min(static_cast<int>(sz), g.n_z - 2);
    double ta = sa - i;
    double tz = sz - j;
    return (1.0 - ta) * ((1.0 - tz) * u(i, j) + tz * u(i, j + 1)) +
           ta * ((1.0 - tz) * u(i + 1, j) + tz * u(i + 1, j + 1));
}

bool all_finite(const Field& u) {
    for (double v : u.data())
        if (!std::isfinite(v)) return false;
    return true;
}

double support_extent_a(const Field& u, double threshold) {
    const Grid2D& g = u.grid();
    double extent = 0.0;
    for (int i = 0; i < g.n_a; ++i) {
        double m = 0.0;
        for (int j = 0; j < g.n_z; ++j) m = std::max(m, std::abs(u(i, j)));
        if (m > threshold) extent = std::max(extent, std::abs(g.a_nodes[i]));
    }
    return extent;
}

} // namespace mfw
