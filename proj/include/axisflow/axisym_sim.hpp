#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "axisflow/errors.hpp"
#include "axisflow/field2d.hpp"
#include "axisflow/poisson.hpp"

namespace axisflow::pde {

/// Analytic initial data: a stream function psi0 (even in r, vanishing on the
/// axis and at r_max) and a swirl profile vtheta0 (odd in r). Specifying the
/// meridional flow through psi makes it divergence-free by construction.
struct InitialData {
    std::string name;
    std::function<double(double r, double z)> psi;
    std::function<double(double r, double z)> v_theta;
};

/// Discrete state of the swirling axisymmetric flow. The stepped variables
/// are eta = omega_theta / r and chi = v_theta / r: both are even in r with
/// regular axis values (the axis vorticity is 2 chi(0)), so centered stencils
/// keep their accuracy all the way to r = 0. The conventional fields are
/// derived views. psi, v_r, v_z are kept consistent with eta at all times:
///     v_r = -(1/r) dz psi,  v_z = (1/r) dr psi.
struct AxisymField {
    Grid2D grid;
    Field2D eta;  ///< azimuthal vorticity over r
    Field2D chi;  ///< swirl velocity over r
    Field2D psi;
    Field2D vr;
    Field2D vz;

    Field2D omega_theta() const {
        Field2D w(grid);
        for (int i = 0; i <= grid.nr; ++i) {
            const double ri = grid.r(i);
            for (int j = 0; j < grid.nz; ++j) w(i, j) = ri * eta(i, j);
        }
        return w;
    }

    Field2D v_theta() const {
        Field2D w(grid);
        for (int i = 1; i <= grid.nr; ++i) {
            const double ri = grid.r(i);
            for (int j = 0; j < grid.nz; ++j) w(i, j) = ri * chi(i, j);
        }
        return w;  // axis row stays exactly zero by parity
    }

    /// v_theta at a node (axis value is exactly zero).
    double vt(int i, int j) const { return grid.r(i) * chi(i, j); }

    /// Max-norm of the discrete cylindrical divergence of (v_r, v_z) over
    /// the axis and interior nodes, using the same stencils as the stepper.
    double max_divergence() const {
        const int nr = grid.nr, nz = grid.nz;
        const double dr = grid.dr, dz = grid.dz;
        double worst = 0.0;
        for (int j = 0; j < nz; ++j) {
            const int jp = grid.jp(j), jm = grid.jm(j);
            // Axis: div = 2*lim(vr/r) + dz vz with the parity limit stencil.
            const double lim_vr =
                ((4.0 / 3.0) * vr(1, j) - (1.0 / 6.0) * vr(2, j)) / dr;
            const double axis_div = 2.0 * lim_vr + (vz(0, jp) - vz(0, jm)) / (2.0 * dz);
            worst = std::max(worst, std::abs(axis_div));
            for (int i = 1; i < nr; ++i) {
                const double ri = grid.r(i);
                const double div =
                    (grid.r(i + 1) * vr(i + 1, j) - grid.r(i - 1) * vr(i - 1, j)) /
                        (2.0 * dr * ri) +
                    (vz(i, jp) - vz(i, jm)) / (2.0 * dz);
                worst = std::max(worst, std::abs(div));
            }
        }
        return worst;
    }

    /// Largest violation of the odd-parity axis conditions in the stored and
    /// derived fields.
    double axis_parity_residual() const {
        double worst = 0.0;
        for (int j = 0; j < grid.nz; ++j) {
            worst = std::max(worst, std::abs(psi(0, j)));
            worst = std::max(worst, std::abs(vr(0, j)));
        }
        return worst;
    }

    /// Kinetic energy integral of (|v_r|^2 + |v_z|^2 + |v_theta|^2) r dr dz
    /// (trapezoid in r; the axis node has zero weight).
    double energy() const {
        const int nr = grid.nr, nz = grid.nz;
        double e = 0.0;
        for (int i = 1; i <= nr; ++i) {
            const double w = (i == nr) ? 0.5 : 1.0;
            const double ri = grid.r(i);
            for (int j = 0; j < nz; ++j) {
                const double vt_ij = ri * chi(i, j);
                e += w * ri * (vr(i, j) * vr(i, j) + vz(i, j) * vz(i, j) + vt_ij * vt_ij);
            }
        }
        return e * grid.dr * grid.dz;
    }

    bool all_finite() const {
        return eta.all_finite() && chi.all_finite() && psi.all_finite() && vr.all_finite() &&
               vz.all_finite();
    }

    double max_speed() const {
        double m = 0.0;
        for (int i = 0; i <= grid.nr; ++i) {
            const double ri = grid.r(i);
            for (int j = 0; j < grid.nz; ++j) {
                m = std::max(m, std::abs(vr(i, j)));
                m = std::max(m, std::abs(vz(i, j)));
                m = std::max(m, std::abs(ri * chi(i, j)));
            }
        }
        return m;
    }
};

/// Per-axis-node diagnostics extracted from one field/pressure snapshot.
struct AxisDiagnostics {
    double t = 0.0;
    std::vector<double> z;
    std::vector<double> lambda;         ///< dz v_z at r = 0
    std::vector<double> omega_bar;      ///< 2 * lim v_theta / r (parity stencil)
    std::vector<double> omega_bar_alt;  ///< 2 * dr v_theta at 0 (one-sided stencil)
    std::vector<double> q_rr;           ///< lim (dr p)/r at r = 0
    std::vector<double> p_33;           ///< dzz p at r = 0
};

/// Residual of the on-axis trace identity
///     laplacian(p) = -(3/2) lambda^2 + omega_bar^2 / 2
/// with the axis Laplacian evaluated as 2 q_rr + p_33. One value per node.
inline std::vector<double> check_trace_identity(const AxisDiagnostics& d) {
    std::vector<double> res(d.z.size());
    for (std::size_t j = 0; j < d.z.size(); ++j) {
        const double lap = 2.0 * d.q_rr[j] + d.p_33[j];
        res[j] = std::abs(lap - (-1.5 * d.lambda[j] * d.lambda[j] +
                                 0.5 * d.omega_bar[j] * d.omega_bar[j]));
    }
    return res;
}

/// Same residual, but with the axis pressure Laplacian re-derived from the
/// pressure grid itself. Guards the precondition that the diagnostics and
/// the pressure belong to the same field state: the recomputed curvature
/// terms must match the ones stored in the diagnostics to rounding.
inline std::vector<double> check_trace_identity(const AxisDiagnostics& d, const PressureField& pf,
                                                const Grid2D& grid) {
    const double dr = grid.dr, dz = grid.dz;
    std::vector<double> res(d.z.size());
    for (std::size_t j = 0; j < d.z.size(); ++j) {
        const int jj = static_cast<int>(j);
        const int jp = grid.jp(jj), jm = grid.jm(jj);
        const auto& p = pf.p;
        const double q_rr = (2.0 / 3.0) * (p(2, jj) - p(0, jj)) / (dr * dr) -
                            (1.0 / 12.0) * (p(3, jj) - p(1, jj)) / (dr * dr);
        const double p_33 = (p(0, jp) - 2.0 * p(0, jj) + p(0, jm)) / (dz * dz);
        const double scale = std::max({1.0, std::abs(q_rr), std::abs(p_33)});
        if (std::abs(q_rr - d.q_rr[j]) > 1e-9 * scale ||
            std::abs(p_33 - d.p_33[j]) > 1e-9 * scale) {
            throw DomainError("diagnostics and pressure come from different field states");
        }
        const double lap = 2.0 * q_rr + p_33;
        res[j] = std::abs(lap - (-1.5 * d.lambda[j] * d.lambda[j] +
                                 0.5 * d.omega_bar[j] * d.omega_bar[j]));
    }
    return res;
}

/// Time stepper and diagnostic extractor for the swirling axisymmetric Euler
/// system in vorticity/stream-function form:
///     D(omega_theta/r)/Dt = (1/r^2) dz (v_theta^2)
///     D(r v_theta)/Dt     = 0
/// advanced with SSP-RK3 and second-order centered conservative fluxes; the
/// stream function is re-solved every stage. Pressure never enters the
/// stepping; it is recovered separately for diagnostics.
class AxisymSim {
public:
    explicit AxisymSim(const Grid2D& g, double cfl = 0.5)
        : grid_(g), cfl_(cfl), stream_(g), pressure_(g) {}

    const Grid2D& grid() const { return grid_; }
    double cfl() const { return cfl_; }

    /// Largest stable step for the current field per the CFL rule.
    double stable_dt(const AxisymField& f) const {
        const double vmax = f.max_speed();
        if (vmax <= 0.0) return std::numeric_limits<double>::infinity();
        return cfl_ * std::min(grid_.dr, grid_.dz) / vmax;
    }

    /// Sample the analytic data onto the grid. Checks axis parity of the
    /// sampled profiles and derives eta from the discrete operator so that
    /// the stream solve inverts it exactly (divergence-free to rounding).
    AxisymField init_field(const InitialData& data) const {
        const int nr = grid_.nr, nz = grid_.nz;

        AxisymField f;
        f.grid = grid_;
        f.eta = Field2D(grid_);
        f.chi = Field2D(grid_);

        Field2D psi0(grid_);
        double scale = 1.0;
        for (int i = 0; i <= nr; ++i) {
            for (int j = 0; j < nz; ++j) {
                psi0(i, j) = data.psi(grid_.r(i), grid_.z(j));
                if (i > 0) f.chi(i, j) = data.v_theta(grid_.r(i), grid_.z(j)) / grid_.r(i);
                scale = std::max(scale, std::abs(psi0(i, j)));
            }
        }
        // Axis value of v_theta/r from the analytic profile (parity stencil
        // at a small probe width, exact through the cubic term).
        for (int j = 0; j < nz; ++j) {
            const double hp = 1e-5;
            const double zj = grid_.z(j);
            f.chi(0, j) = ((4.0 / 3.0) * data.v_theta(hp, zj) -
                           (1.0 / 6.0) * data.v_theta(2.0 * hp, zj)) /
                          hp;
        }

        // Axis parity of the sampled profiles.
        const double tol = 1e-10 * scale;
        for (int j = 0; j < nz; ++j) {
            const double zj = grid_.z(j);
            if (std::abs(data.v_theta(0.0, zj)) > tol) {
                throw ParityViolation("v_theta does not vanish on the axis");
            }
            if (std::abs(data.psi(0.0, zj)) > tol) {
                throw ParityViolation("psi does not vanish on the axis");
            }
            // Linear-in-r content of psi (must be even near the axis). The
            // probe width is fixed and small so that the r^4 term of a
            // legitimate even profile stays far below the threshold.
            const double hp = 5e-5;
            const double c1 = (4.0 * data.psi(0.5 * hp, zj) - data.psi(hp, zj)) / hp;
            if (std::abs(c1) > tol) {
                throw ParityViolation("psi has odd (linear-in-r) content at the axis");
            }
            if (std::abs(psi0(nr, j)) > tol) {
                throw ParityViolation("psi must vanish at r_max (free-slip outer wall)");
            }
        }

        // eta = omega/r from the discrete operator applied to sampled psi.
        derive_eta_from_psi(psi0, f.eta);
        finish_state(f);
        return f;
    }

    /// Advance one step of size dt. Throws CFLViolation if dt exceeds the
    /// stability bound for the incoming field and NonFiniteField if the state
    /// picks up NaNs or infinities.
    AxisymField step(const AxisymField& f, double dt) const {
        if (!(dt > 0.0)) throw DomainError("step: dt must be positive");
        const double limit = stable_dt(f);
        if (dt > limit * (1.0 + 1e-12)) {
            throw CFLViolation("dt " + std::to_string(dt) + " exceeds CFL limit " +
                               std::to_string(limit));
        }
        if (!f.all_finite()) throw NonFiniteField("field is not finite at step entry");

        const int n = (grid_.nr + 1) * grid_.nz;

        Field2D de(grid_), dg(grid_);
        AxisymField u1, u2;

        // Shu-Osher SSP-RK3.
        rhs(f.eta, f.chi, de, dg);
        u1.grid = grid_;
        u1.eta = f.eta;
        u1.chi = f.chi;
        for (int m = 0; m < n; ++m) {
            u1.eta.data[m] += dt * de.data[m];
            u1.chi.data[m] += dt * dg.data[m];
        }
        enforce_pins(u1, f);
        finish_state(u1);

        rhs(u1.eta, u1.chi, de, dg);
        u2.grid = grid_;
        u2.eta = u1.eta;
        u2.chi = u1.chi;
        for (int m = 0; m < n; ++m) {
            u2.eta.data[m] = 0.75 * f.eta.data[m] + 0.25 * (u1.eta.data[m] + dt * de.data[m]);
            u2.chi.data[m] = 0.75 * f.chi.data[m] + 0.25 * (u1.chi.data[m] + dt * dg.data[m]);
        }
        enforce_pins(u2, f);
        finish_state(u2);

        rhs(u2.eta, u2.chi, de, dg);
        AxisymField out;
        out.grid = grid_;
        out.eta = u2.eta;
        out.chi = u2.chi;
        const double c13 = 1.0 / 3.0, c23 = 2.0 / 3.0;
        for (int m = 0; m < n; ++m) {
            out.eta.data[m] = c13 * f.eta.data[m] + c23 * (u2.eta.data[m] + dt * de.data[m]);
            out.chi.data[m] = c13 * f.chi.data[m] + c23 * (u2.chi.data[m] + dt * dg.data[m]);
        }
        enforce_pins(out, f);
        finish_state(out);
        if (!out.all_finite()) throw NonFiniteField("field became non-finite during the step");
        return out;
    }

    /// Recover the diagnostic pressure from the momentum balance: solve the
    /// cylindrical Poisson problem with rhs = -tr((grad v)^2) and Neumann
    /// wall data (v_theta^2 / r at r_max).
    PressureField recover_pressure(const AxisymField& f, double tol = 1e-10) const {
        Field2D rhs(grid_);
        assemble_pressure_rhs(f, rhs);
        std::vector<double> wall(grid_.nz);
        for (int j = 0; j < grid_.nz; ++j) {
            const double vt = f.vt(grid_.nr, j);
            wall[j] = vt * vt / grid_.r_max;
        }
        return pressure_.solve(rhs, wall, tol);
    }

    /// On-axis diagnostics. The limits at r = 0 use one-sided parity
    /// stencils on the first two off-axis nodes; q_rr applies the same
    /// stencil shape to (dr p)/r.
    AxisDiagnostics extract_axis(const AxisymField& f, const PressureField& pf) const {
        const int nz = grid_.nz;
        const double dr = grid_.dr, dz = grid_.dz;
        AxisDiagnostics d;
        d.z.resize(nz);
        d.lambda.resize(nz);
        d.omega_bar.resize(nz);
        d.omega_bar_alt.resize(nz);
        d.q_rr.resize(nz);
        d.p_33.resize(nz);
        for (int j = 0; j < nz; ++j) {
            const int jp = grid_.jp(j), jm = grid_.jm(j);
            d.z[j] = grid_.z(j);
            d.lambda[j] = (f.vz(0, jp) - f.vz(0, jm)) / (2.0 * dz);
            const double vt1 = f.vt(1, j), vt2 = f.vt(2, j);
            d.omega_bar[j] = 2.0 * ((4.0 / 3.0) * vt1 - (1.0 / 6.0) * vt2) / dr;
            d.omega_bar_alt[j] = 2.0 * (4.0 * vt1 - vt2) / (2.0 * dr);
            const auto& p = pf.p;
            d.q_rr[j] = (2.0 / 3.0) * (p(2, j) - p(0, j)) / (dr * dr) -
                        (1.0 / 12.0) * (p(3, j) - p(1, j)) / (dr * dr);
            d.p_33[j] = (p(0, jp) - 2.0 * p(0, j) + p(0, jm)) / (dz * dz);
        }
        return d;
    }

private:
    void derive_eta_from_psi(const Field2D& psi, Field2D& eta) const {
        const int nr = grid_.nr, nz = grid_.nz;
        const double dr = grid_.dr, dz = grid_.dz;
        for (int j = 0; j < nz; ++j) {
            const int jp = grid_.jp(j), jm = grid_.jm(j);
            for (int i = 1; i < nr; ++i) {
                const double ri = grid_.r(i);
                const double drr = (psi(i + 1, j) - 2.0 * psi(i, j) + psi(i - 1, j)) / (dr * dr);
                const double dr1 = (psi(i + 1, j) - psi(i - 1, j)) / (2.0 * dr);
                const double dzz = (psi(i, jp) - 2.0 * psi(i, j) + psi(i, jm)) / (dz * dz);
                eta(i, j) = -(drr - dr1 / ri + dzz) / (ri * ri);
            }
        }
        // Axis: psi = c2 r^2 + c4 r^4 + ... gives eta(0) = -(8 c4 + c2'').
        std::vector<double> c2(nz);
        for (int j = 0; j < nz; ++j) {
            c2[j] = (16.0 * psi(1, j) - psi(2, j)) / (12.0 * dr * dr);
        }
        for (int j = 0; j < nz; ++j) {
            const double c4 = (psi(2, j) - 4.0 * psi(1, j)) / (12.0 * dr * dr * dr * dr);
            const double c2zz = (c2[grid_.jp(j)] - 2.0 * c2[j] + c2[grid_.jm(j)]) / (dz * dz);
            eta(0, j) = -(8.0 * c4 + c2zz);
        }
        // Wall: one-sided with psi = 0 on the row itself.
        for (int j = 0; j < nz; ++j) {
            const double R = grid_.r_max;
            const double dpsi = (-4.0 * psi(nr - 1, j) + psi(nr - 2, j)) / (2.0 * dr);
            const double ddpsi =
                (2.0 * psi(nr, j) - 5.0 * psi(nr - 1, j) + 4.0 * psi(nr - 2, j) - psi(nr - 3, j)) /
                (dr * dr);
            eta(nr, j) = -(ddpsi - dpsi / R) / (R * R);
        }
    }

    // Solve psi from eta and rebuild the velocities.
    void finish_state(AxisymField& f) const {
        const int nr = grid_.nr, nz = grid_.nz;
        const double dr = grid_.dr, dz = grid_.dz;
        Field2D omega(grid_);
        for (int i = 0; i <= nr; ++i) {
            const double ri = grid_.r(i);
            for (int j = 0; j < nz; ++j) omega(i, j) = ri * f.eta(i, j);
        }
        f.psi = stream_.solve_checked(omega);
        f.vr = Field2D(grid_);
        f.vz = Field2D(grid_);
        for (int j = 0; j < nz; ++j) {
            const int jp = grid_.jp(j), jm = grid_.jm(j);
            f.vz(0, j) = (16.0 * f.psi(1, j) - f.psi(2, j)) / (6.0 * dr * dr);
            for (int i = 1; i < nr; ++i) {
                const double ri = grid_.r(i);
                f.vr(i, j) = -(f.psi(i, jp) - f.psi(i, jm)) / (2.0 * dz * ri);
                f.vz(i, j) = (f.psi(i + 1, j) - f.psi(i - 1, j)) / (2.0 * dr * ri);
            }
            // Wall: psi vanishes along the row, so v_r = 0; v_z one-sided.
            f.vr(nr, j) = 0.0;
            f.vz(nr, j) = (-4.0 * f.psi(nr - 1, j) + f.psi(nr - 2, j)) / (2.0 * dr * grid_.r_max);
        }
    }

    // Tendencies for (eta, chi). The advective parts are centered
    // conservative fluxes; chi additionally carries the geometric source
    // -2 (v_r/r) chi that encodes conservation of the circulation r^2 chi.
    // Both unknowns are even in r with F = r v_r q fluxes behaving like r^2
    // near the axis, so the centered stencils stay uniformly second order.
    // Wall rows are held fixed (fields are tapered there by construction of
    // the scenarios).
    void rhs(const Field2D& eta, const Field2D& chi, Field2D& de, Field2D& dg) const {
        const int nr = grid_.nr, nz = grid_.nz;
        const double dr = grid_.dr, dz = grid_.dz;

        // Velocities for this stage state.
        AxisymField tmp;
        tmp.grid = grid_;
        tmp.eta = eta;
        tmp.chi = chi;
        finish_state(tmp);

        // Fluxes F = r v_r q and G = v_z q for q in {eta, chi}, the swirl
        // source w = chi^2 for eta, and v_r/r for the chi source.
        Field2D fe(grid_), fg(grid_), ge(grid_), gg(grid_), w(grid_), vroverr(grid_);
        for (int i = 0; i <= nr; ++i) {
            const double ri = grid_.r(i);
            for (int j = 0; j < nz; ++j) {
                const double rvr = ri * tmp.vr(i, j);
                fe(i, j) = rvr * eta(i, j);
                fg(i, j) = rvr * chi(i, j);
                ge(i, j) = tmp.vz(i, j) * eta(i, j);
                gg(i, j) = tmp.vz(i, j) * chi(i, j);
                w(i, j) = chi(i, j) * chi(i, j);
                if (i > 0) vroverr(i, j) = tmp.vr(i, j) / ri;
            }
        }
        for (int j = 0; j < nz; ++j) {
            vroverr(0, j) = ((4.0 / 3.0) * tmp.vr(1, j) - (1.0 / 6.0) * tmp.vr(2, j)) / dr;
        }

        for (int j = 0; j < nz; ++j) {
            const int jp = grid_.jp(j), jm = grid_.jm(j);
            // Axis: (1/r) dr F -> F''(0) = 2 F(dr)/dr^2 for the even fluxes
            // with F(0) = 0.
            de(0, j) = -2.0 * fe(1, j) / (dr * dr) - (ge(0, jp) - ge(0, jm)) / (2.0 * dz) +
                       (w(0, jp) - w(0, jm)) / (2.0 * dz);
            dg(0, j) = -2.0 * fg(1, j) / (dr * dr) - (gg(0, jp) - gg(0, jm)) / (2.0 * dz) -
                       2.0 * vroverr(0, j) * chi(0, j);
            for (int i = 1; i < nr; ++i) {
                const double ri = grid_.r(i);
                de(i, j) = -(fe(i + 1, j) - fe(i - 1, j)) / (2.0 * dr * ri) -
                           (ge(i, jp) - ge(i, jm)) / (2.0 * dz) +
                           (w(i, jp) - w(i, jm)) / (2.0 * dz);
                dg(i, j) = -(fg(i + 1, j) - fg(i - 1, j)) / (2.0 * dr * ri) -
                           (gg(i, jp) - gg(i, jm)) / (2.0 * dz) -
                           2.0 * vroverr(i, j) * chi(i, j);
            }
            de(nr, j) = 0.0;
            dg(nr, j) = 0.0;
        }
    }

    // Wall constraints re-imposed after each stage update.
    void enforce_pins(AxisymField& u, const AxisymField& ref) const {
        for (int j = 0; j < grid_.nz; ++j) {
            u.eta(grid_.nr, j) = ref.eta(grid_.nr, j);
            u.chi(grid_.nr, j) = ref.chi(grid_.nr, j);
        }
    }

    // rhs = -tr((grad v)^2) in cylindrical axisymmetric form:
    //   -( (dr vr)^2 + (vr/r)^2 + (dz vz)^2 ) + 2 (vt/r) dr vt - 2 dr vz dz vr
    void assemble_pressure_rhs(const AxisymField& f, Field2D& rhs) const {
        const int nr = grid_.nr, nz = grid_.nz;
        const double dr = grid_.dr, dz = grid_.dz;
        for (int j = 0; j < nz; ++j) {
            const int jp = grid_.jp(j), jm = grid_.jm(j);
            for (int i = 0; i <= nr; ++i) {
                double drvr, vroverr, drvz, vtoverr, drvt;
                if (i == 0) {
                    // Parity limits: dr vr(0) = lim vr/r, dr vt(0) = lim vt/r.
                    const double lim_vr = ((4.0 / 3.0) * f.vr(1, j) - (1.0 / 6.0) * f.vr(2, j)) / dr;
                    drvr = lim_vr;
                    vroverr = lim_vr;
                    drvt = f.chi(0, j);
                    vtoverr = f.chi(0, j);
                    drvz = 0.0;
                } else if (i == nr) {
                    drvr = (3.0 * f.vr(nr, j) - 4.0 * f.vr(nr - 1, j) + f.vr(nr - 2, j)) / (2.0 * dr);
                    drvz = (3.0 * f.vz(nr, j) - 4.0 * f.vz(nr - 1, j) + f.vz(nr - 2, j)) / (2.0 * dr);
                    const double vtn = f.vt(nr, j);
                    drvt = (3.0 * vtn - 4.0 * f.vt(nr - 1, j) + f.vt(nr - 2, j)) / (2.0 * dr);
                    vroverr = f.vr(nr, j) / grid_.r_max;
                    vtoverr = vtn / grid_.r_max;
                } else {
                    const double ri = grid_.r(i);
                    drvr = (f.vr(i + 1, j) - f.vr(i - 1, j)) / (2.0 * dr);
                    drvz = (f.vz(i + 1, j) - f.vz(i - 1, j)) / (2.0 * dr);
                    drvt = (f.vt(i + 1, j) - f.vt(i - 1, j)) / (2.0 * dr);
                    vroverr = f.vr(i, j) / ri;
                    vtoverr = f.chi(i, j);
                }
                const double dzvz = (f.vz(i, jp) - f.vz(i, jm)) / (2.0 * dz);
                const double dzvr = (f.vr(i, jp) - f.vr(i, jm)) / (2.0 * dz);
                rhs(i, j) = -(drvr * drvr + vroverr * vroverr + dzvz * dzvz) +
                            2.0 * vtoverr * drvt - 2.0 * drvz * dzvr;
            }
        }
    }

    Grid2D grid_;
    double cfl_;
    StreamSolver stream_;
    PressureSolver pressure_;
};

}  // namespace axisflow::pde
