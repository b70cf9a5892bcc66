#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "axisflow/axisym_sim.hpp"
#include "axisflow/errors.hpp"
#include "axisflow/particle.hpp"

namespace axisflow::pde {

struct SimOptions {
    double horizon = 0.5;
    int output_every = 1;       ///< record diagnostics every k-th step
    double fixed_dt = 0.0;      ///< 0: per-step CFL-limited step
    double pressure_tol = 1e-10;
};

/// Everything a run records at output times: axis diagnostics, the axis
/// velocity history (for particle tracking), energy, and the compatibility
/// defect of each pressure solve. Full field snapshots are streamed to the
/// observer callback instead of being stored.
struct SimulationRun {
    Grid2D grid;
    std::vector<double> times;
    std::vector<AxisDiagnostics> diagnostics;
    VelocityHistory history;
    std::vector<double> energy;
    std::vector<double> pressure_defect;
    AxisymField final_field;
    long steps_taken = 0;
};

using SnapshotObserver =
    std::function<void(const AxisymField&, const PressureField&, double t, long step)>;

/// March the field to the horizon, recording axis diagnostics at the chosen
/// cadence. The time step is CFL-limited per step unless fixed_dt is set.
inline SimulationRun run_simulation(AxisymSim& sim, const AxisymField& initial,
                                    const SimOptions& opts,
                                    const SnapshotObserver& observer = nullptr) {
    if (!(opts.horizon > 0.0)) throw DomainError("run_simulation: horizon must be positive");
    if (opts.output_every < 1) throw DomainError("run_simulation: output_every must be >= 1");

    SimulationRun run;
    run.grid = sim.grid();
    run.history.z_period = sim.grid().z_period;
    run.history.nz = sim.grid().nz;

    AxisymField f = initial;
    double t = 0.0;
    long step = 0;

    const auto record = [&](const AxisymField& field, double now) {
        const PressureField pf = sim.recover_pressure(field, opts.pressure_tol);
        AxisDiagnostics d = sim.extract_axis(field, pf);
        d.t = now;
        run.times.push_back(now);
        run.history.times.push_back(now);
        std::vector<double> axis_row(field.grid.nz);
        for (int j = 0; j < field.grid.nz; ++j) axis_row[j] = field.vz(0, j);
        run.history.v.push_back(std::move(axis_row));
        run.energy.push_back(field.energy());
        run.pressure_defect.push_back(pf.compatibility_defect);
        run.diagnostics.push_back(std::move(d));
        if (observer) observer(field, pf, now, step);
    };

    record(f, 0.0);
    const double tiny = 1e-12 * opts.horizon;
    while (t < opts.horizon - tiny) {
        double dt = opts.fixed_dt > 0.0 ? opts.fixed_dt : sim.stable_dt(f);
        if (!std::isfinite(dt)) dt = opts.horizon - t;  // quiescent field
        dt = std::min(dt, opts.horizon - t);
        f = sim.step(f, dt);
        t += dt;
        ++step;
        if (step % opts.output_every == 0 || t >= opts.horizon - tiny) {
            record(f, t);
        }
    }
    run.final_field = std::move(f);
    run.steps_taken = step;
    return run;
}

/// Discrepancies between the on-axis PDE diagnostics sampled along one
/// tracked axis particle and the reduced evolution equations:
///   strain:     d/dt lambda vs lambda^2/2 - omega_bar^2/2 + 2 q_rr
///   strain_alt: d/dt lambda vs -lambda^2 - p_33
///   swirl:      d/dt omega_bar vs lambda * omega_bar
/// plus the trace-identity residual along the path and over the whole axis.
/// By construction strain and strain_alt differ exactly by the trace
/// residual, which `algebraic_closure` records as a sanity value.
struct OdeConsistencyReport {
    double axis_label = 0.0;
    int n_interior = 0;
    double strain_max = 0.0, strain_l2 = 0.0;
    double strain_alt_max = 0.0, strain_alt_l2 = 0.0;
    double swirl_max = 0.0, swirl_l2 = 0.0;
    double trace_path_max = 0.0;
    double trace_axis_max = 0.0;
    double algebraic_closure = 0.0;  ///< max |(strain_res - strain_alt_res) - trace_res|
    std::vector<double> path;        ///< particle position at each output time
    std::vector<double> lambda_path, omega_path, qrr_path, p33_path;
};

inline OdeConsistencyReport ode_consistency_report(const SimulationRun& run, double axis_label,
                                                   int substeps = 8) {
    if (run.times.size() < 3) throw DomainError("consistency report needs >= 3 output times");
    OdeConsistencyReport rep;
    rep.axis_label = axis_label;
    rep.path = advect_axis_particle(axis_label, run.history, substeps);

    const std::size_t n = run.times.size();
    rep.lambda_path.resize(n);
    rep.omega_path.resize(n);
    rep.qrr_path.resize(n);
    rep.p33_path.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& d = run.diagnostics[k];
        const double x = rep.path[k];
        rep.lambda_path[k] = detail::interp_periodic_cubic(d.lambda, x, run.grid.z_period);
        rep.omega_path[k] = detail::interp_periodic_cubic(d.omega_bar, x, run.grid.z_period);
        rep.qrr_path[k] = detail::interp_periodic_cubic(d.q_rr, x, run.grid.z_period);
        rep.p33_path[k] = detail::interp_periodic_cubic(d.p_33, x, run.grid.z_period);
    }

    double s2_strain = 0.0, s2_alt = 0.0, s2_swirl = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double dt2 = run.times[k + 1] - run.times[k - 1];
        const double dlam = (rep.lambda_path[k + 1] - rep.lambda_path[k - 1]) / dt2;
        const double domb = (rep.omega_path[k + 1] - rep.omega_path[k - 1]) / dt2;
        const double lam = rep.lambda_path[k], omb = rep.omega_path[k];
        const double r_strain = dlam - (0.5 * lam * lam - 0.5 * omb * omb + 2.0 * rep.qrr_path[k]);
        const double r_alt = dlam - (-lam * lam - rep.p33_path[k]);
        const double r_swirl = domb - lam * omb;
        const double r_trace =
            (2.0 * rep.qrr_path[k] + rep.p33_path[k]) - (-1.5 * lam * lam + 0.5 * omb * omb);
        rep.strain_max = std::max(rep.strain_max, std::abs(r_strain));
        rep.strain_alt_max = std::max(rep.strain_alt_max, std::abs(r_alt));
        rep.swirl_max = std::max(rep.swirl_max, std::abs(r_swirl));
        rep.trace_path_max = std::max(rep.trace_path_max, std::abs(r_trace));
        rep.algebraic_closure =
            std::max(rep.algebraic_closure, std::abs((r_alt - r_strain) - r_trace));
        s2_strain += r_strain * r_strain;
        s2_alt += r_alt * r_alt;
        s2_swirl += r_swirl * r_swirl;
        ++rep.n_interior;
    }
    if (rep.n_interior > 0) {
        rep.strain_l2 = std::sqrt(s2_strain / rep.n_interior);
        rep.strain_alt_l2 = std::sqrt(s2_alt / rep.n_interior);
        rep.swirl_l2 = std::sqrt(s2_swirl / rep.n_interior);
    }
    for (const auto& d : run.diagnostics) {
        for (double r : check_trace_identity(d)) {
            rep.trace_axis_max = std::max(rep.trace_axis_max, r);
        }
    }
    return rep;
}

/// First recorded time at which the radial pressure curvature turns negative
/// at the tracked particle; empty when the condition never fails within the
/// run (treated as an infinite persistence time by callers).
inline std::optional<double> first_hypothesis_violation(const SimulationRun& run,
                                                        const OdeConsistencyReport& rep) {
    for (std::size_t k = 0; k < run.times.size(); ++k) {
        if (rep.qrr_path[k] < 0.0) return run.times[k];
    }
    return std::nullopt;
}

}  // namespace axisflow::pde
