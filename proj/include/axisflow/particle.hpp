#pragma once

#include <cmath>
#include <vector>

#include "axisflow/errors.hpp"

namespace axisflow::pde {

/// Time-indexed history of the axial velocity on the axis, v_z(0, z, t_k),
/// as produced by a simulation run. Periodic in z.
struct VelocityHistory {
    double z_period = 0.0;
    int nz = 0;
    std::vector<double> times;
    std::vector<std::vector<double>> v;  ///< v[k][j] = v_z(0, z_j, t_k)

    double dz() const { return z_period / nz; }
};

namespace detail {

// 4-point Lagrange interpolation on the periodic axis row.
inline double interp_periodic_cubic(const std::vector<double>& f, double x, double z_period) {
    const int n = static_cast<int>(f.size());
    const double dz = z_period / n;
    double xn = x / dz;
    xn -= std::floor(xn / n) * n;
    int j0 = static_cast<int>(std::floor(xn));
    if (j0 >= n) j0 -= n;
    const double s = xn - j0;
    const auto at = [&](int j) {
        int jj = (j % n + n) % n;
        return f[jj];
    };
    const double fm = at(j0 - 1), f0 = at(j0), f1 = at(j0 + 1), f2 = at(j0 + 2);
    const double wm = -s * (s - 1.0) * (s - 2.0) / 6.0;
    const double w0 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    const double w1 = -(s + 1.0) * s * (s - 2.0) / 2.0;
    const double w2 = (s + 1.0) * s * (s - 1.0) / 6.0;
    return wm * fm + w0 * f0 + w1 * f1 + w2 * f2;
}

}  // namespace detail

/// Velocity at (x, t) from the history: cubic in z, linear in t.
inline double sample_axis_velocity(const VelocityHistory& h, double x, double t) {
    const std::size_t n = h.times.size();
    if (n == 0) throw DomainError("empty velocity history");
    if (n == 1) return detail::interp_periodic_cubic(h.v[0], x, h.z_period);
    if (t <= h.times.front()) return detail::interp_periodic_cubic(h.v.front(), x, h.z_period);
    if (t >= h.times.back()) return detail::interp_periodic_cubic(h.v.back(), x, h.z_period);
    std::size_t k = 0;
    while (k + 2 < n && h.times[k + 1] <= t) ++k;
    const double t0 = h.times[k], t1 = h.times[k + 1];
    const double a = (t - t0) / (t1 - t0);
    const double v0 = detail::interp_periodic_cubic(h.v[k], x, h.z_period);
    const double v1 = detail::interp_periodic_cubic(h.v[k + 1], x, h.z_period);
    return (1.0 - a) * v0 + a * v1;
}

/// Integrate the axis particle path dX/dt = v_z(0, X, t) with RK4 over the
/// recorded time intervals (substeps per interval). Positions are wrapped
/// into [0, z_period). Returns one position per history time, starting at a.
inline std::vector<double> advect_axis_particle(double a, const VelocityHistory& h,
                                                int substeps = 4) {
    if (h.times.empty()) throw DomainError("empty velocity history");
    std::vector<double> path;
    path.reserve(h.times.size());
    double x = a - std::floor(a / h.z_period) * h.z_period;
    path.push_back(x);
    for (std::size_t k = 0; k + 1 < h.times.size(); ++k) {
        const double t0 = h.times[k], t1 = h.times[k + 1];
        const double hstep = (t1 - t0) / substeps;
        for (int s = 0; s < substeps; ++s) {
            const double ts = t0 + s * hstep;
            const double k1 = sample_axis_velocity(h, x, ts);
            const double k2 = sample_axis_velocity(h, x + 0.5 * hstep * k1, ts + 0.5 * hstep);
            const double k3 = sample_axis_velocity(h, x + 0.5 * hstep * k2, ts + 0.5 * hstep);
            const double k4 = sample_axis_velocity(h, x + hstep * k3, ts + hstep);
            x += hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        x -= std::floor(x / h.z_period) * h.z_period;
        path.push_back(x);
    }
    return path;
}

}  // namespace axisflow::pde
