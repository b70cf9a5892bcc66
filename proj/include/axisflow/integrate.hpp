#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "axisflow/axis_state.hpp"
#include "axisflow/errors.hpp"
#include "axisflow/forcing.hpp"

namespace axisflow {

/// Adaptive integration settings. `tolerance` bounds the local error per unit
/// time (scaled by max(1, |state|)), so the end-to-end error over a horizon T
/// is of order tolerance * T.
struct IntegratorConfig {
    double tolerance = 1e-10;
    double min_step = 1e-14;
    double max_step = 0.0;     ///< 0: no cap beyond the horizon itself
    double initial_step = 0.0; ///< 0: pick automatically
    double blowup_threshold = 1e9;
    double safety = 0.9;
    double shrink_limit = 0.2;
    double growth_limit = 5.0;
    double fixed_step = 0.0;   ///< >0: plain RK4 with this step, no error control
    long max_steps = 200000000;
};

enum class TerminalKind { CompletedHorizon, BlowUpDetected, StepFailure };

inline const char* to_string(TerminalKind k) {
    switch (k) {
        case TerminalKind::CompletedHorizon: return "completed";
        case TerminalKind::BlowUpDetected: return "blow_up";
        case TerminalKind::StepFailure: return "step_failure";
    }
    return "unknown";
}

/// Outcome of an integration run: how it ended and at what time.
struct TerminalStatus {
    TerminalKind kind = TerminalKind::CompletedHorizon;
    double time = 0.0;
};

struct TrajectorySample {
    double t = 0.0;
    double x3 = 0.0;  ///< axis label of the trajectory (constant for the reduced system)
    AxisState state;
    double q = 0.0;
};

/// Time series of the reduced state along one axis trajectory.
struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    TerminalStatus status;

    const TrajectorySample& back() const { return samples.back(); }
};

namespace detail {

struct Pair2 {
    double a = 0.0, b = 0.0;
};

inline Pair2 rhs_raw(double lam, double omb, double q) {
    return {0.5 * (lam * lam - omb * omb) + 2.0 * q, lam * omb};
}

// One classical RK4 step of the forced system. Works on raw doubles so that
// transient overflow during a rejected trial step is harmless.
inline Pair2 rk4_step_raw(double t, double lam, double omb, double h, const PressureForcing& q) {
    const Pair2 k1 = rhs_raw(lam, omb, q(t));
    const Pair2 k2 = rhs_raw(lam + 0.5 * h * k1.a, omb + 0.5 * h * k1.b, q(t + 0.5 * h));
    const Pair2 k3 = rhs_raw(lam + 0.5 * h * k2.a, omb + 0.5 * h * k2.b, q(t + 0.5 * h));
    const Pair2 k4 = rhs_raw(lam + h * k3.a, omb + h * k3.b, q(t + h));
    return {lam + h / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a),
            omb + h / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b)};
}

}  // namespace detail

/// Fixed-step classical RK4 for a generic 2-component system. Used by the
/// non-adaptive mode and as an independent cross-check in tests.
inline AxisState rk4_fixed(const std::function<AxisState(double, const AxisState&)>& f,
                           const AxisState& y0, double t0, double t1, int n_steps) {
    if (n_steps <= 0) throw DomainError("rk4_fixed: n_steps must be positive");
    const double h = (t1 - t0) / n_steps;
    double lam = y0.lambda, omb = y0.omega_bar;
    double t = t0;
    for (int i = 0; i < n_steps; ++i) {
        const AxisState k1 = f(t, AxisState(lam, omb));
        const AxisState k2 = f(t + 0.5 * h, AxisState(lam + 0.5 * h * k1.lambda, omb + 0.5 * h * k1.omega_bar));
        const AxisState k3 = f(t + 0.5 * h, AxisState(lam + 0.5 * h * k2.lambda, omb + 0.5 * h * k2.omega_bar));
        const AxisState k4 = f(t + h, AxisState(lam + h * k3.lambda, omb + h * k3.omega_bar));
        lam += h / 6.0 * (k1.lambda + 2.0 * k2.lambda + 2.0 * k3.lambda + k4.lambda);
        omb += h / 6.0 * (k1.omega_bar + 2.0 * k2.omega_bar + 2.0 * k3.omega_bar + k4.omega_bar);
        t = t0 + (i + 1) * h;
    }
    return AxisState(lam, omb);
}

/// Integrate the forced on-axis system from t = 0 to `horizon` with adaptive
/// RK4 (step doubling). Terminates early with BlowUpDetected once |lambda| or
/// |omega_bar| crosses config.blowup_threshold (the crossing sample is kept
/// and its time reported), or with StepFailure if the required step size
/// underflows config.min_step before either happens.
inline TrajectoryRecord integrate(const AxisState& state0, const PressureForcing& forcing,
                                  double horizon, const IntegratorConfig& config = {},
                                  double axis_label = 0.0) {
    if (!(horizon > 0.0)) throw DomainError("integrate: horizon must be positive");
    if (!(config.tolerance > 0.0)) throw DomainError("integrate: tolerance must be positive");
    if (!(config.min_step > 0.0)) throw DomainError("integrate: min_step must be positive");

    TrajectoryRecord rec;
    double t = 0.0;
    double lam = state0.lambda, omb = state0.omega_bar;
    rec.samples.push_back({t, axis_label, state0, forcing(0.0)});

    if (state0.max_abs() >= config.blowup_threshold) {
        rec.status = {TerminalKind::BlowUpDetected, 0.0};
        return rec;
    }

    // Fixed-step mode: no error control, plain RK4 to the horizon.
    if (config.fixed_step > 0.0) {
        const long n = std::max(1L, std::lround(std::ceil(horizon / config.fixed_step - 1e-12)));
        const double h = horizon / static_cast<double>(n);
        for (long i = 0; i < n; ++i) {
            const auto y = detail::rk4_step_raw(t, lam, omb, h, forcing);
            t = horizon * static_cast<double>(i + 1) / static_cast<double>(n);
            lam = y.a;
            omb = y.b;
            if (!std::isfinite(lam) || !std::isfinite(omb)) {
                rec.status = {TerminalKind::StepFailure, t};
                return rec;
            }
            rec.samples.push_back({t, axis_label, AxisState(lam, omb), forcing(t)});
            if (std::max(std::abs(lam), std::abs(omb)) >= config.blowup_threshold) {
                rec.status = {TerminalKind::BlowUpDetected, t};
                return rec;
            }
        }
        rec.status = {TerminalKind::CompletedHorizon, horizon};
        return rec;
    }

    const double max_step = config.max_step > 0.0 ? config.max_step : horizon;
    double h = config.initial_step > 0.0 ? config.initial_step
                                         : std::min(max_step, std::pow(config.tolerance, 0.25));
    h = std::min(h, horizon);
    long steps = 0;

    while (t < horizon) {
        if (++steps > config.max_steps) {
            rec.status = {TerminalKind::StepFailure, t};
            return rec;
        }
        h = std::min(h, horizon - t);
        // Steps indistinguishable from rounding noise at the current time
        // cannot advance the solution.
        const double floor_step = std::max(config.min_step, 8.0 * std::abs(t) * 1e-16);
        if (h < floor_step && horizon - t > floor_step) {
            rec.status = {TerminalKind::StepFailure, t};
            return rec;
        }

        const auto big = detail::rk4_step_raw(t, lam, omb, h, forcing);
        const auto mid = detail::rk4_step_raw(t, lam, omb, 0.5 * h, forcing);
        const auto two = detail::rk4_step_raw(t + 0.5 * h, mid.a, mid.b, 0.5 * h, forcing);

        const double err =
            std::max(std::abs(two.a - big.a), std::abs(two.b - big.b)) / 15.0;
        const double scale = std::max(1.0, std::max(std::abs(two.a), std::abs(two.b)));
        // Error-per-unit-time control with a floor at the rounding noise of
        // the step-doubling estimate itself (err cannot drop below ~eps*|y|).
        const double target = std::max(config.tolerance * h, 4e-15) * scale;
        const bool finite = std::isfinite(err) && std::isfinite(two.a) && std::isfinite(two.b);

        if (finite && err <= target) {
            t += h;
            lam = two.a;
            omb = two.b;
            rec.samples.push_back({t, axis_label, AxisState(lam, omb), forcing(t)});
            if (std::max(std::abs(lam), std::abs(omb)) >= config.blowup_threshold) {
                rec.status = {TerminalKind::BlowUpDetected, t};
                return rec;
            }
            double grow = config.growth_limit;
            if (err > 0.0) {
                grow = config.safety * std::pow(target / err, 0.25);
            }
            h = std::min(max_step, h * std::clamp(grow, config.shrink_limit, config.growth_limit));
        } else {
            double shrink = config.shrink_limit;
            if (finite && err > 0.0) {
                shrink = config.safety * std::pow(target / err, 0.25);
            }
            h *= std::clamp(shrink, config.shrink_limit, 0.9);
            if (h < floor_step) {
                rec.status = {TerminalKind::StepFailure, t};
                return rec;
            }
        }
    }
    rec.status = {TerminalKind::CompletedHorizon, horizon};
    return rec;
}

}  // namespace axisflow
