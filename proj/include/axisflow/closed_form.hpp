#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "axisflow/axis_state.hpp"
#include "axisflow/errors.hpp"

namespace axisflow {

/// Explicit solution of the complex Riccati equation dTheta/dt = Theta^2/2:
///
///     Theta(t) = 2*Theta0 / (2 - Theta0*t)
///
/// Throws BlowUpSingularity when |2 - Theta0*t| < eps, i.e. at or past the
/// singular time.
inline ThetaValue closed_form_theta(const ThetaValue& theta0, double t, double eps = 1e-12) {
    const std::complex<double> z0 = theta0.to_complex();
    const std::complex<double> denom = 2.0 - z0 * t;
    if (std::abs(denom) < eps) {
        throw BlowUpSingularity("closed_form_theta evaluated at a singular time");
    }
    const std::complex<double> z = 2.0 * z0 / denom;
    return ThetaValue(z.real(), z.imag());
}

/// Real/imaginary parts of the Riccati solution written out componentwise:
///
///     omega_bar(t) = 4*w0 / D(t)
///     lambda(t)    = (4*l0 - 2*(l0^2 + w0^2)*t) / D(t)
///     D(t)         = (2 - l0*t)^2 + (w0*t)^2
///
/// D is |2 - Theta0*t|^2, so this agrees with closed_form_theta to rounding.
inline AxisState closed_form_state(double lambda0, double omega0, double t, double eps = 1e-12) {
    const double a = 2.0 - lambda0 * t;
    const double b = omega0 * t;
    const double denom = a * a + b * b;
    if (denom <= eps) {
        throw BlowUpSingularity("closed_form_state evaluated at a singular time");
    }
    const double lam = (4.0 * lambda0 - 2.0 * (lambda0 * lambda0 + omega0 * omega0) * t) / denom;
    const double omb = 4.0 * omega0 / denom;
    return AxisState(lam, omb);
}

/// Singular time of the closed form. The denominator (2 - l0*t)^2 + (w0*t)^2
/// vanishes at a positive time only when w0 = 0 and l0 > 0, in which case the
/// singular time is 2/l0. Returns nullopt otherwise.
///
/// The zero test on omega0 is effectively exact (|w0| <= 1e-300): any nonzero
/// swirl keeps the denominator strictly positive. Use near_blowup_time for
/// small-but-nonzero omega0.
inline std::optional<double> blowup_time(double lambda0, double omega0) {
    if (!std::isfinite(lambda0) || !std::isfinite(omega0)) {
        throw DomainError("blowup_time requires finite inputs");
    }
    if (std::abs(omega0) <= 1e-300 && lambda0 > 0.0) return 2.0 / lambda0;
    return std::nullopt;
}

/// Location and value of the minimum of the closed-form denominator over
/// t > 0. For small nonzero omega0 this is the time of closest approach to
/// blow-up (the analytic minimizer is 2*l0/(l0^2 + w0^2)).
struct DenominatorMinimum {
    double t = 0.0;      ///< time of the minimum
    double value = 0.0;  ///< denominator value there
};

/// Scan-based minimization of D(t) = (2 - l0*t)^2 + (w0*t)^2 over (0, t_max],
/// refined by golden-section search. Returns nullopt when lambda0 <= 0 (D is
/// nondecreasing from t = 0, no interior minimum).
inline std::optional<DenominatorMinimum> near_blowup_time(double lambda0, double omega0,
                                                          double t_max = 0.0) {
    if (!std::isfinite(lambda0) || !std::isfinite(omega0)) {
        throw DomainError("near_blowup_time requires finite inputs");
    }
    if (!(lambda0 > 0.0)) return std::nullopt;
    if (t_max <= 0.0) t_max = 4.0 / lambda0;

    const auto denom = [&](double t) {
        const double a = 2.0 - lambda0 * t;
        const double b = omega0 * t;
        return a * a + b * b;
    };

    // Coarse scan to bracket the minimum.
    const int n = 4096;
    int best = 0;
    double best_val = denom(0.0);
    for (int k = 1; k <= n; ++k) {
        const double v = denom(t_max * k / n);
        if (v < best_val) {
            best_val = v;
            best = k;
        }
    }
    double lo = t_max * std::max(0, best - 1) / n;
    double hi = t_max * std::min(n, best + 1) / n;

    // Golden-section refinement.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = denom(x1), f2 = denom(x2);
    while (hi - lo > 1e-13 * t_max) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = denom(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = denom(x2);
        }
    }
    const double t_star = 0.5 * (lo + hi);
    return DenominatorMinimum{t_star, denom(t_star)};
}

/// Comparison bound for the axial strain along trajectories started with
/// omega_bar = 0 and nonnegative q: lambda(t) >= 2*l0 / (2 - t*l0).
/// Valid for l0 > 0 and t < 2/l0.
inline double lower_bound_lambda(double lambda0, double t) {
    if (!(lambda0 > 0.0)) throw DomainError("lower_bound_lambda requires lambda0 > 0");
    if (t >= 2.0 / lambda0) throw DomainError("lower_bound_lambda requires t < 2/lambda0");
    return 2.0 * lambda0 / (2.0 - t * lambda0);
}

/// Exponential representation of the axis vorticity along a trajectory:
/// omega_bar(T) = w0 * exp(integral of lambda dt), with the integral taken by
/// the trapezoidal rule over the given (t, lambda) samples. Returns exactly 0
/// when w0 = 0: the zero-swirl set is invariant.
inline double vorticity_exponential(double omega0,
                                    const std::vector<std::pair<double, double>>& lambda_samples) {
    if (omega0 == 0.0) return 0.0;
    if (lambda_samples.size() < 2) return omega0;
    double integral = 0.0;
    for (std::size_t k = 1; k < lambda_samples.size(); ++k) {
        const auto& [t0, l0] = lambda_samples[k - 1];
        const auto& [t1, l1] = lambda_samples[k];
        if (!(t1 > t0)) throw DomainError("vorticity_exponential: samples must increase in time");
        integral += 0.5 * (l0 + l1) * (t1 - t0);
    }
    return omega0 * std::exp(integral);
}

/// Two persistence-time thresholds for the pressure-curvature condition
/// along an axis trajectory. If the condition q >= 0 survives at least this
/// long, no global smooth solution exists. The strict value 2/l0 is the
/// singular time of the closed form; 1/l0 is a looser variant of the same
/// criterion. Both are exposed; callers choose which to report against.
inline double t1_threshold_loose(double lambda0) {
    if (!(lambda0 > 0.0)) throw DomainError("t1_threshold_loose requires lambda0 > 0");
    return 1.0 / lambda0;
}

inline double t1_threshold_strict(double lambda0) {
    if (!(lambda0 > 0.0)) throw DomainError("t1_threshold_strict requires lambda0 > 0");
    return 2.0 / lambda0;
}

}  // namespace axisflow
