#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "axisflow/axisym_sim.hpp"
#include "axisflow/errors.hpp"

namespace axisflow::pde {

/// Steady pure swirl: no meridional flow, z-independent azimuthal velocity
/// v_theta = omega0 * r * exp(-(r/core)^2) * taper. Near the axis this is
/// rigid rotation at rate omega0, so the measured q_rr converges to
/// omega0^2. The taper keeps the wall values at zero.
inline InitialData make_pure_swirl(double omega0, double core, double r_max) {
    InitialData d;
    d.name = "pure-swirl";
    d.psi = [](double, double) { return 0.0; };
    d.v_theta = [omega0, core, r_max](double r, double) {
        const double x = r / r_max;
        const double taper = (1.0 - x * x) * (1.0 - x * x);
        return omega0 * r * std::exp(-(r / core) * (r / core)) * taper;
    };
    return d;
}

/// Generic smooth data with both meridional circulation and swirl, wall-
/// tapered, z-periodic. amp_psi scales the stream function, amp_swirl the
/// azimuthal velocity, eps_z the z-modulation of the swirl.
inline InitialData make_swirl_wave(double amp_psi, double amp_swirl, double eps_z, double r_max,
                                   double z_period) {
    InitialData d;
    d.name = "swirl-wave";
    const double kz = 2.0 * std::numbers::pi / z_period;
    d.psi = [amp_psi, r_max, kz](double r, double z) {
        const double x = r / r_max;
        const double sh = (1.0 - x * x) * (1.0 - x * x);
        return amp_psi * r * r * sh * std::exp(-4.0 * x * x) * std::sin(kz * z);
    };
    d.v_theta = [amp_swirl, eps_z, r_max, kz](double r, double z) {
        const double x = r / r_max;
        const double sh = (1.0 - x * x) * (1.0 - x * x);
        return amp_swirl * r * std::exp(-4.0 * x * x) * sh * (1.0 + eps_z * std::sin(kz * z));
    };
    return d;
}

/// Swirl-free meridional circulation cell (useful for divergence checks).
inline InitialData make_meridional_wave(double amp_psi, double r_max, double z_period) {
    InitialData d = make_swirl_wave(amp_psi, 0.0, 0.0, r_max, z_period);
    d.name = "meridional-wave";
    d.v_theta = [](double, double) { return 0.0; };
    return d;
}

inline InitialData initial_data_by_name(const std::string& name, double r_max, double z_period,
                                        double amp = 0.3, double swirl = 0.5, double eps = 0.5) {
    if (name == "pure-swirl") return make_pure_swirl(swirl, 0.25 * r_max, r_max);
    if (name == "swirl-wave") return make_swirl_wave(amp, swirl, eps, r_max, z_period);
    if (name == "meridional-wave") return make_meridional_wave(amp, r_max, z_period);
    throw DomainError("no built-in initial data named '" + name + "'");
}

}  // namespace axisflow::pde
