#pragma once

#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axisflow/closed_form.hpp"
#include "axisflow/initial_data.hpp"
#include "axisflow/integrate.hpp"
#include "axisflow/io.hpp"
#include "axisflow/lemma.hpp"
#include "axisflow/simulation.hpp"

namespace axisflow::cli {

using nlohmann::json;

enum class Mode { ClosedForm, Integrate, PdeSim, CheckLemma };

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::ClosedForm: return "closed-form";
        case Mode::Integrate: return "integrate";
        case Mode::PdeSim: return "pde-sim";
        case Mode::CheckLemma: return "check-lemma";
    }
    return "unknown";
}

inline Mode mode_from_string(const std::string& s) {
    if (s == "closed-form") return Mode::ClosedForm;
    if (s == "integrate") return Mode::Integrate;
    if (s == "pde-sim") return Mode::PdeSim;
    if (s == "check-lemma") return Mode::CheckLemma;
    throw ValidationError("mode", "unknown mode '" + s + "'");
}

struct ForcingSpec {
    std::string type = "none";  // none | constant | table
    double value = 0.0;
    std::vector<double> times;
    std::vector<double> values;
    std::string interp = "monotone-cubic";  // monotone-cubic | linear
};

struct GridSpec {
    int nr = 128;
    int nz = 128;
    double r_max = 1.0;
    double z_period = 2.0 * std::numbers::pi;
};

/// Validated scenario description. Defaults are documented in --help.
struct ScenarioConfig {
    Mode mode = Mode::ClosedForm;

    // closed-form / integrate
    double lambda0 = 0.0;
    double omega0 = 0.0;
    double t = 1.0;       ///< closed-form sweep end time
    int samples = 100;    ///< closed-form sweep sample count
    double horizon = 0.0;
    double initial_position = 0.0;
    ForcingSpec forcing;
    IntegratorConfig integrator;

    // pde-sim
    GridSpec grid;
    std::string profile = "swirl-wave";
    double amp_psi = 0.3;
    double amp_swirl = 0.5;
    double eps_z = 0.5;
    double cfl = 0.5;
    int output_every = 1;
    int snapshot_every = 0;  ///< 0: no field snapshots
    std::vector<double> particles{1.0, 2.5};
    double pressure_tol = 1e-10;

    // check-lemma
    std::vector<std::string> fields{"polynomial", "wave", "spiral", "swirl"};
    std::vector<double> z_samples{0.3, 1.0, 2.2};
    double h = 1e-3;
    double rotation_radius = 0.6;

    // common
    std::string out_dir = ".";
    std::string format = "csv";  // csv | binary (field snapshots only)
    bool verbose = false;
};

namespace detail {

inline double require_number(const json& j, const std::string& field) {
    if (!j.contains(field)) throw ValidationError(field, "missing required field '" + field + "'");
    if (!j.at(field).is_number()) throw ValidationError(field, "field '" + field + "' must be a number");
    const double v = j.at(field).get<double>();
    if (!std::isfinite(v)) throw ValidationError(field, "field '" + field + "' must be finite");
    return v;
}

inline double optional_number(const json& j, const std::string& field, double fallback) {
    if (!j.contains(field)) return fallback;
    if (!j.at(field).is_number()) throw ValidationError(field, "field '" + field + "' must be a number");
    const double v = j.at(field).get<double>();
    if (!std::isfinite(v)) throw ValidationError(field, "field '" + field + "' must be finite");
    return v;
}

inline int optional_int(const json& j, const std::string& field, int fallback) {
    if (!j.contains(field)) return fallback;
    if (!j.at(field).is_number_integer()) {
        throw ValidationError(field, "field '" + field + "' must be an integer");
    }
    return j.at(field).get<int>();
}

inline std::string optional_string(const json& j, const std::string& field,
                                   const std::string& fallback) {
    if (!j.contains(field)) return fallback;
    if (!j.at(field).is_string()) throw ValidationError(field, "field '" + field + "' must be a string");
    return j.at(field).get<std::string>();
}

inline std::vector<double> number_list(const json& j, const std::string& field) {
    if (!j.at(field).is_array()) throw ValidationError(field, "field '" + field + "' must be an array");
    std::vector<double> out;
    for (const auto& v : j.at(field)) {
        if (!v.is_number()) throw ValidationError(field, "field '" + field + "' must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace detail

/// Parse and validate a JSON scenario document. When `expected` is given (the
/// CLI subcommand), a "mode" key in the document is optional but must agree.
inline ScenarioConfig parse_config(const std::string& text,
                                   std::optional<Mode> expected = std::nullopt) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config must be a JSON object");

    ScenarioConfig c;
    if (j.contains("mode")) {
        if (!j.at("mode").is_string()) throw ValidationError("mode", "mode must be a string");
        c.mode = mode_from_string(j.at("mode").get<std::string>());
        if (expected && *expected != c.mode) {
            throw ValidationError("mode", std::string("config mode '") + to_string(c.mode) +
                                              "' does not match subcommand '" +
                                              to_string(*expected) + "'");
        }
    } else if (expected) {
        c.mode = *expected;
    } else {
        throw ValidationError("mode", "missing required field 'mode'");
    }

    using detail::optional_int;
    using detail::optional_number;
    using detail::optional_string;
    using detail::require_number;

    c.out_dir = optional_string(j, "out", c.out_dir);
    c.format = optional_string(j, "format", c.format);
    if (c.format != "csv" && c.format != "binary") {
        throw ValidationError("format", "format must be 'csv' or 'binary'");
    }
    if (j.contains("verbose")) {
        if (!j.at("verbose").is_boolean()) throw ValidationError("verbose", "verbose must be a bool");
        c.verbose = j.at("verbose").get<bool>();
    }

    switch (c.mode) {
        case Mode::ClosedForm: {
            c.lambda0 = require_number(j, "lambda0");
            c.omega0 = require_number(j, "omega0");
            c.t = require_number(j, "t");
            if (!(c.t > 0.0)) throw ValidationError("t", "t must be positive");
            c.samples = optional_int(j, "samples", c.samples);
            if (c.samples < 1) throw ValidationError("samples", "samples must be >= 1");
            break;
        }
        case Mode::Integrate: {
            c.lambda0 = require_number(j, "lambda0");
            c.omega0 = require_number(j, "omega0");
            c.horizon = require_number(j, "horizon");
            if (!(c.horizon > 0.0)) throw ValidationError("horizon", "horizon must be positive");
            c.initial_position = optional_number(j, "initial_position", 0.0);
            c.integrator.tolerance = optional_number(j, "tolerance", c.integrator.tolerance);
            if (!(c.integrator.tolerance > 0.0)) {
                throw ValidationError("tolerance", "tolerance must be positive");
            }
            c.integrator.blowup_threshold =
                optional_number(j, "blowup_threshold", c.integrator.blowup_threshold);
            c.integrator.min_step = optional_number(j, "min_step", c.integrator.min_step);
            c.integrator.max_step = optional_number(j, "max_step", c.integrator.max_step);
            c.integrator.fixed_step = optional_number(j, "fixed_step", c.integrator.fixed_step);
            if (j.contains("forcing")) {
                const auto& f = j.at("forcing");
                if (!f.is_object()) throw ValidationError("forcing", "forcing must be an object");
                c.forcing.type = optional_string(f, "type", "constant");
                if (c.forcing.type == "constant") {
                    c.forcing.value = detail::require_number(f, "value");
                } else if (c.forcing.type == "table") {
                    c.forcing.times = detail::number_list(f, "times");
                    c.forcing.values = detail::number_list(f, "values");
                    c.forcing.interp = optional_string(f, "interp", c.forcing.interp);
                    if (c.forcing.interp != "monotone-cubic" && c.forcing.interp != "linear") {
                        throw ValidationError("forcing.interp",
                                              "interp must be 'monotone-cubic' or 'linear'");
                    }
                } else if (c.forcing.type != "none") {
                    throw ValidationError("forcing.type",
                                          "forcing type must be none, constant or table");
                }
            }
            break;
        }
        case Mode::PdeSim: {
            if (!j.contains("grid")) throw ValidationError("grid", "pde-sim requires a grid object");
            const auto& gj = j.at("grid");
            if (!gj.is_object()) throw ValidationError("grid", "grid must be an object");
            c.grid.nr = optional_int(gj, "nr", c.grid.nr);
            c.grid.nz = optional_int(gj, "nz", c.grid.nz);
            c.grid.r_max = optional_number(gj, "r_max", c.grid.r_max);
            c.grid.z_period = optional_number(gj, "z_period", c.grid.z_period);
            if (c.grid.nr < 16 || c.grid.nz < 16) {
                throw ValidationError("grid", "grid needs nr >= 16 and nz >= 16");
            }
            if (!(c.grid.r_max > 0.0) || !(c.grid.z_period > 0.0)) {
                throw ValidationError("grid", "grid extents must be positive");
            }
            c.horizon = require_number(j, "horizon");
            if (!(c.horizon > 0.0)) throw ValidationError("horizon", "horizon must be positive");
            c.profile = optional_string(j, "profile", c.profile);
            c.amp_psi = optional_number(j, "amp_psi", c.amp_psi);
            c.amp_swirl = optional_number(j, "amp_swirl", c.amp_swirl);
            c.eps_z = optional_number(j, "eps_z", c.eps_z);
            c.cfl = optional_number(j, "cfl", c.cfl);
            if (!(c.cfl > 0.0) || c.cfl > 1.0) throw ValidationError("cfl", "cfl must lie in (0, 1]");
            c.output_every = optional_int(j, "output_every", c.output_every);
            if (c.output_every < 1) throw ValidationError("output_every", "output_every must be >= 1");
            c.snapshot_every = optional_int(j, "snapshot_every", c.snapshot_every);
            if (c.snapshot_every < 0) throw ValidationError("snapshot_every", "must be >= 0");
            if (j.contains("particles")) c.particles = detail::number_list(j, "particles");
            c.pressure_tol = optional_number(j, "pressure_tol", c.pressure_tol);
            break;
        }
        case Mode::CheckLemma: {
            if (j.contains("fields")) {
                c.fields.clear();
                if (!j.at("fields").is_array()) {
                    throw ValidationError("fields", "fields must be an array of names");
                }
                for (const auto& v : j.at("fields")) {
                    if (!v.is_string()) throw ValidationError("fields", "field names must be strings");
                    c.fields.push_back(v.get<std::string>());
                }
                if (c.fields.empty()) throw ValidationError("fields", "fields must not be empty");
            }
            if (j.contains("z_samples")) c.z_samples = detail::number_list(j, "z_samples");
            c.h = optional_number(j, "h", c.h);
            if (!(c.h > 0.0) || c.h > 1e-2) {
                throw ValidationError("h", "h must lie in (0, 1e-2]");
            }
            c.rotation_radius = optional_number(j, "rotation_radius", c.rotation_radius);
            if (!(c.rotation_radius > 0.0)) {
                throw ValidationError("rotation_radius", "rotation_radius must be positive");
            }
            break;
        }
    }
    return c;
}

/// Machine-readable outcome of one run. Serialized as JSON next to the data
/// files; every numeric field survives a JSON round trip bit-exactly.
struct RunSummary {
    Mode mode = Mode::ClosedForm;
    std::string terminal_status = "completed";
    std::optional<double> t_blow_predicted;
    std::optional<double> t_blow_observed;
    std::optional<double> blowup_gap_rel;
    std::optional<double> t_hypothesis_violated;
    json max_residuals = json::object();
    json files = json::object();
    int exit_code = 0;

    json to_json() const {
        json j;
        j["mode"] = to_string(mode);
        j["terminal_status"] = terminal_status;
        if (t_blow_predicted) j["t_blow_predicted"] = *t_blow_predicted;
        if (t_blow_observed) j["t_blow_observed"] = *t_blow_observed;
        if (blowup_gap_rel) j["blowup_gap_rel"] = *blowup_gap_rel;
        j["t_hypothesis_violated"] =
            t_hypothesis_violated ? json(*t_hypothesis_violated) : json(nullptr);
        j["max_residuals"] = max_residuals;
        j["files"] = files;
        j["exit_code"] = exit_code;
        return j;
    }
};

namespace detail {

inline PressureForcing build_forcing(const ForcingSpec& spec) {
    if (spec.type == "none") return PressureForcing::zero();
    if (spec.type == "constant") return PressureForcing::constant(spec.value);
    const ForcingInterp interp =
        spec.interp == "linear" ? ForcingInterp::Linear : ForcingInterp::MonotoneCubic;
    return PressureForcing::tabulated(spec.times, spec.values, interp);
}

inline std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

}  // namespace detail

inline RunSummary run_closed_form(const ScenarioConfig& c) {
    RunSummary s;
    s.mode = Mode::ClosedForm;
    s.t_blow_predicted = blowup_time(c.lambda0, c.omega0);
    std::vector<double> ts;
    std::vector<AxisState> states;
    const double t_stop =
        s.t_blow_predicted ? std::min(c.t, 0.999 * *s.t_blow_predicted) : c.t;
    for (int k = 0; k <= c.samples; ++k) {
        const double tk = t_stop * k / c.samples;
        ts.push_back(tk);
        states.push_back(closed_form_state(c.lambda0, c.omega0, tk));
    }
    io::write_closed_form_csv(detail::join_path(c.out_dir, "closed_form.csv"), ts, states);
    s.files["series"] = "closed_form.csv";
    s.terminal_status = (s.t_blow_predicted && c.t >= *s.t_blow_predicted)
                            ? "truncated_at_blowup"
                            : "completed";
    return s;
}

inline RunSummary run_integrate(const ScenarioConfig& c) {
    RunSummary s;
    s.mode = Mode::Integrate;
    const auto forcing = detail::build_forcing(c.forcing);
    const auto rec = integrate(AxisState(c.lambda0, c.omega0), forcing, c.horizon, c.integrator,
                               c.initial_position);
    io::write_trajectory_csv(detail::join_path(c.out_dir, "trajectory.csv"), rec);
    s.files["trajectory"] = "trajectory.csv";
    s.terminal_status = to_string(rec.status.kind);
    s.t_blow_predicted = blowup_time(c.lambda0, c.omega0);
    if (rec.status.kind == TerminalKind::BlowUpDetected) {
        s.t_blow_observed = rec.status.time;
        s.exit_code = 2;
    } else if (rec.status.kind == TerminalKind::StepFailure) {
        s.exit_code = 1;
    }
    if (s.t_blow_predicted && s.t_blow_observed) {
        s.blowup_gap_rel = std::abs(*s.t_blow_predicted - *s.t_blow_observed) / *s.t_blow_predicted;
    }
    return s;
}

inline RunSummary run_pde_sim(const ScenarioConfig& c) {
    RunSummary s;
    s.mode = Mode::PdeSim;
    const pde::Grid2D grid(c.grid.nr, c.grid.nz, c.grid.r_max, c.grid.z_period);
    pde::AxisymSim sim(grid, c.cfl);
    const auto data = pde::initial_data_by_name(c.profile, grid.r_max, grid.z_period, c.amp_psi,
                                                c.amp_swirl, c.eps_z);
    const auto f0 = sim.init_field(data);

    pde::SimOptions opts;
    opts.horizon = c.horizon;
    opts.output_every = c.output_every;
    opts.pressure_tol = c.pressure_tol;

    long snapshot_count = 0;
    pde::SnapshotObserver observer = nullptr;
    if (c.snapshot_every > 0) {
        observer = [&](const pde::AxisymField& f, const pde::PressureField& pf, double t,
                       long step) {
            (void)step;
            if (snapshot_count % c.snapshot_every == 0) {
                const std::string base = "snapshot_" + std::to_string(snapshot_count);
                if (c.format == "binary") {
                    io::write_snapshot_binary(detail::join_path(c.out_dir, base + ".bin"), f, pf, t);
                } else {
                    io::write_snapshot_csv(detail::join_path(c.out_dir, base + ".csv"), f, pf);
                }
            }
            ++snapshot_count;
        };
    }

    const auto run = pde::run_simulation(sim, f0, opts, observer);

    io::write_axis_diagnostics_csv(detail::join_path(c.out_dir, "axis_diagnostics.csv"),
                                   run.diagnostics);
    s.files["axis_diagnostics"] = "axis_diagnostics.csv";

    double strain_max = 0.0, swirl_max = 0.0, trace_max = 0.0;
    json particles = json::array();
    for (std::size_t p = 0; p < c.particles.size(); ++p) {
        const auto rep = pde::ode_consistency_report(run, c.particles[p]);
        const std::string pname = "particle_" + std::to_string(p) + ".csv";
        io::write_particle_csv(detail::join_path(c.out_dir, pname), run, rep);
        json pj;
        pj["axis_label"] = rep.axis_label;
        pj["file"] = pname;
        pj["strain_residual_max"] = rep.strain_max;
        pj["strain_residual_l2"] = rep.strain_l2;
        pj["strain_alt_residual_max"] = rep.strain_alt_max;
        pj["strain_alt_residual_l2"] = rep.strain_alt_l2;
        pj["swirl_residual_max"] = rep.swirl_max;
        pj["swirl_residual_l2"] = rep.swirl_l2;
        pj["trace_residual_path_max"] = rep.trace_path_max;
        const auto violated = pde::first_hypothesis_violation(run, rep);
        pj["t_hypothesis_violated"] = violated ? json(*violated) : json(nullptr);
        if (violated && (!s.t_hypothesis_violated || *violated < *s.t_hypothesis_violated)) {
            s.t_hypothesis_violated = *violated;
        }
        particles.push_back(pj);
        strain_max = std::max(strain_max, rep.strain_max);
        swirl_max = std::max(swirl_max, rep.swirl_max);
        trace_max = std::max(trace_max, rep.trace_axis_max);
    }
    s.max_residuals["strain_equation"] = strain_max;
    s.max_residuals["swirl_equation"] = swirl_max;
    s.max_residuals["trace_identity"] = trace_max;
    s.max_residuals["divergence"] = run.final_field.max_divergence();
    const double e0 = run.energy.front();
    s.max_residuals["energy_drift_rel"] =
        e0 > 0.0 ? std::abs(run.energy.back() - e0) / e0 : 0.0;
    s.files["particles"] = particles;
    s.terminal_status = "completed";
    return s;
}

inline RunSummary run_check_lemma(const ScenarioConfig& c) {
    RunSummary s;
    s.mode = Mode::CheckLemma;
    json rows = json::array();
    double min_order = std::numeric_limits<double>::infinity();
    double max_rotation = 0.0;
    int suspects = 0;
    json parity = json::object();
    for (const auto& name : c.fields) {
        const auto field = lemma::field_by_name(name);
        // Record rather than reject: a parity-violating field is a valid
        // negative control and shows up as non-converging identities below.
        parity[name] = lemma::parity_residual(field, c.z_samples);
        for (const auto& row : lemma::full_report(field, c.z_samples, c.h)) {
            json r;
            r["field"] = name;
            r["identity"] = lemma::to_string(row.identity);
            r["z"] = row.z;
            r["h"] = row.h;
            r["residual"] = row.residual;
            r["order"] = row.order ? json(*row.order) : json(nullptr);
            r["suspect"] = row.suspect;
            rows.push_back(r);
            if (row.order) min_order = std::min(min_order, *row.order);
            if (row.suspect) ++suspects;
        }
        for (double z : c.z_samples) {
            const auto rot =
                lemma::rotation_map_residuals(field, c.rotation_radius, 0.5 * c.rotation_radius, z);
            max_rotation = std::max(max_rotation, rot.max_abs());
        }
    }
    auto out = io::open_output(detail::join_path(c.out_dir, "lemma_report.json"));
    out << rows.dump(2) << '\n';
    s.files["report"] = "lemma_report.json";
    s.max_residuals["parity"] = parity;
    s.max_residuals["rotation_identities"] = max_rotation;
    if (std::isfinite(min_order)) s.max_residuals["min_convergence_order"] = min_order;
    s.max_residuals["suspect_identities"] = suspects;
    if (suspects > 0) {
        s.terminal_status = "suspect_identities";
        s.exit_code = 1;
    }
    return s;
}

/// Execute a validated scenario, write its artifacts and the summary JSON.
/// Exit-code convention: 0 success, 2 blow-up detected (a successful outcome
/// kept distinguishable for scripting), 1 failure.
inline RunSummary run(const ScenarioConfig& c) {
    std::filesystem::create_directories(c.out_dir);
    RunSummary s;
    switch (c.mode) {
        case Mode::ClosedForm: s = run_closed_form(c); break;
        case Mode::Integrate: s = run_integrate(c); break;
        case Mode::PdeSim: s = run_pde_sim(c); break;
        case Mode::CheckLemma: s = run_check_lemma(c); break;
    }
    const std::string path = detail::join_path(c.out_dir, "summary.json");
    auto out = io::open_output(path);
    out << s.to_json().dump(2) << '\n';
    return s;
}

}  // namespace axisflow::cli
