#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "axisflow/axisym_sim.hpp"
#include "axisflow/errors.hpp"
#include "axisflow/integrate.hpp"
#include "axisflow/simulation.hpp"

namespace axisflow::io {

/// Shortest exact decimal form; identical input bits always produce
/// identical bytes, which is what makes the CSV outputs reproducible.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    return out;
}

/// Trajectory CSV, schema: t,x3,lambda,omega_bar,q
inline void write_trajectory_csv(const std::string& path, const TrajectoryRecord& rec) {
    auto out = open_output(path);
    out << "t,x3,lambda,omega_bar,q\n";
    for (const auto& s : rec.samples) {
        out << format_double(s.t) << ',' << format_double(s.x3) << ','
            << format_double(s.state.lambda) << ',' << format_double(s.state.omega_bar) << ','
            << format_double(s.q) << '\n';
    }
}

/// Closed-form sweep CSV, schema: t,lambda,omega_bar
inline void write_closed_form_csv(const std::string& path,
                                  const std::vector<double>& t,
                                  const std::vector<AxisState>& states) {
    auto out = open_output(path);
    out << "t,lambda,omega_bar\n";
    for (std::size_t k = 0; k < t.size(); ++k) {
        out << format_double(t[k]) << ',' << format_double(states[k].lambda) << ','
            << format_double(states[k].omega_bar) << '\n';
    }
}

/// Axis diagnostics CSV, schema: t,z,lambda,omega_bar,q_rr,p_33
/// (one row per axis node per output time).
inline void write_axis_diagnostics_csv(const std::string& path,
                                       const std::vector<pde::AxisDiagnostics>& diags) {
    auto out = open_output(path);
    out << "t,z,lambda,omega_bar,q_rr,p_33\n";
    for (const auto& d : diags) {
        for (std::size_t j = 0; j < d.z.size(); ++j) {
            out << format_double(d.t) << ',' << format_double(d.z[j]) << ','
                << format_double(d.lambda[j]) << ',' << format_double(d.omega_bar[j]) << ','
                << format_double(d.q_rr[j]) << ',' << format_double(d.p_33[j]) << '\n';
        }
    }
}

/// Tracked-particle CSV in the trajectory schema with q = q_rr on the path.
inline void write_particle_csv(const std::string& path, const pde::SimulationRun& run,
                               const pde::OdeConsistencyReport& rep) {
    auto out = open_output(path);
    out << "t,x3,lambda,omega_bar,q\n";
    for (std::size_t k = 0; k < run.times.size(); ++k) {
        out << format_double(run.times[k]) << ',' << format_double(rep.path[k]) << ','
            << format_double(rep.lambda_path[k]) << ',' << format_double(rep.omega_path[k]) << ','
            << format_double(rep.qrr_path[k]) << '\n';
    }
}

/// Field snapshot CSV, schema: r,z,omega_theta,v_theta,psi,p
inline void write_snapshot_csv(const std::string& path, const pde::AxisymField& f,
                               const pde::PressureField& pf) {
    auto out = open_output(path);
    out << "r,z,omega_theta,v_theta,psi,p\n";
    const auto& g = f.grid;
    for (int i = 0; i <= g.nr; ++i) {
        const double ri = g.r(i);
        for (int j = 0; j < g.nz; ++j) {
            out << format_double(ri) << ',' << format_double(g.z(j)) << ','
                << format_double(ri * f.eta(i, j)) << ',' << format_double(f.vt(i, j)) << ','
                << format_double(f.psi(i, j)) << ',' << format_double(pf.p(i, j)) << '\n';
        }
    }
}

/// Binary snapshot: magic "AXSB1\0\0\0", int64 (nr+1), int64 nz, doubles
/// r_max, z_period, t, the r coordinates (nr+1 doubles), the z coordinates
/// (nz doubles), then four row-major (nr+1) x nz arrays of doubles in order
/// omega_theta, v_theta, psi, p.
inline void write_snapshot_binary(const std::string& path, const pde::AxisymField& f,
                                  const pde::PressureField& pf, double t) {
    auto out = open_output(path);
    const char magic[8] = {'A', 'X', 'S', 'B', '1', 0, 0, 0};
    out.write(magic, 8);
    const auto& g = f.grid;
    const std::int64_t ni = g.nr + 1, nj = g.nz;
    out.write(reinterpret_cast<const char*>(&ni), 8);
    out.write(reinterpret_cast<const char*>(&nj), 8);
    const double meta[3] = {g.r_max, g.z_period, t};
    out.write(reinterpret_cast<const char*>(meta), sizeof(meta));
    std::vector<double> coord(g.nr + 1);
    for (int i = 0; i <= g.nr; ++i) coord[i] = g.r(i);
    out.write(reinterpret_cast<const char*>(coord.data()),
              static_cast<std::streamsize>(coord.size() * sizeof(double)));
    coord.resize(g.nz);
    for (int j = 0; j < g.nz; ++j) coord[j] = g.z(j);
    out.write(reinterpret_cast<const char*>(coord.data()),
              static_cast<std::streamsize>(coord.size() * sizeof(double)));
    const auto dump = [&](const pde::Field2D& field) {
        out.write(reinterpret_cast<const char*>(field.data.data()),
                  static_cast<std::streamsize>(field.data.size() * sizeof(double)));
    };
    dump(f.omega_theta());
    dump(f.v_theta());
    dump(f.psi);
    dump(pf.p);
}

}  // namespace axisflow::io
