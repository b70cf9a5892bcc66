#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "axisflow/errors.hpp"

namespace axisflow::lemma {

/// Smooth axisymmetric test field given by cylindrical profiles of (r, z).
/// vr and vtheta must be odd in r, vz and p even in r. `divergence_free`
/// declares that (vr, vz) satisfies the cylindrical divergence identity
/// analytically, which the diagonal-strain identity relies on.
struct SyntheticField {
    std::string name;
    std::function<double(double, double)> vr;
    std::function<double(double, double)> vtheta;
    std::function<double(double, double)> vz;
    std::function<double(double, double)> p;
    bool divergence_free = false;
};

/// Cartesian velocity components and pressure at a point.
struct CartesianSample {
    double v1 = 0.0, v2 = 0.0, v3 = 0.0, p = 0.0;
};

/// Evaluate the field in Cartesian coordinates via the cylindrical map
///   v1 = (x1/r) vr - (x2/r) vtheta,  v2 = (x2/r) vr + (x1/r) vtheta.
/// At the exact axis the transverse components vanish by parity.
inline CartesianSample cartesian_eval(const SyntheticField& f, double x1, double x2, double x3) {
    const double r = std::hypot(x1, x2);
    if (r == 0.0) {
        return {0.0, 0.0, f.vz(0.0, x3), f.p(0.0, x3)};
    }
    const double vr = f.vr(r, x3);
    const double vt = f.vtheta(r, x3);
    const double c1 = x1 / r, c2 = x2 / r;
    return {c1 * vr - c2 * vt, c2 * vr + c1 * vt, f.vz(r, x3), f.p(r, x3)};
}

/// Largest parity defect over the given z samples: odd profiles evaluated at
/// r = 0 plus the one-sided radial derivative of the even profiles at 0.
inline double parity_residual(const SyntheticField& f, const std::vector<double>& z_samples,
                              double delta = 1e-4) {
    double worst = 0.0;
    for (double z : z_samples) {
        worst = std::max(worst, std::abs(f.vr(0.0, z)));
        worst = std::max(worst, std::abs(f.vtheta(0.0, z)));
        const auto onesided = [&](const std::function<double(double, double)>& g) {
            return (-3.0 * g(0.0, z) + 4.0 * g(delta, z) - g(2.0 * delta, z)) / (2.0 * delta);
        };
        worst = std::max(worst, std::abs(onesided(f.vz)));
        worst = std::max(worst, std::abs(onesided(f.p)));
    }
    return worst;
}

inline void verify_parity(const SyntheticField& f, const std::vector<double>& z_samples,
                          double tol = 1e-10) {
    const double res = parity_residual(f, z_samples);
    if (!(res <= tol)) {
        throw ParityViolation("field '" + f.name + "' violates axis parity: residual " +
                              std::to_string(res));
    }
}

/// The on-axis identity groups that can be checked numerically.
enum class AxisIdentity {
    VelocityCartesianZero,    ///< v1, v2 and their axial/transverse derivatives vanish
    VelocityCylindricalZero,  ///< vr, vtheta and related derivatives vanish
    StrainDiagonalChain,      ///< d1v1 = d2v2 = -d3v3/2 = dr vr = lim vr/r
    SwirlGradientChain,       ///< d1v2 = -d2v1 = dr vtheta = lim vtheta/r
    PressureGradientZero,     ///< first and mixed pressure derivatives vanish
    PressureHessianChain,     ///< d1^2 p = d2^2 p = dr^2 p = lim (dr p)/r
};

inline constexpr std::array<AxisIdentity, 6> all_identities = {
    AxisIdentity::VelocityCartesianZero, AxisIdentity::VelocityCylindricalZero,
    AxisIdentity::StrainDiagonalChain,   AxisIdentity::SwirlGradientChain,
    AxisIdentity::PressureGradientZero,  AxisIdentity::PressureHessianChain,
};

inline const char* to_string(AxisIdentity id) {
    switch (id) {
        case AxisIdentity::VelocityCartesianZero: return "velocity-cartesian-zero";
        case AxisIdentity::VelocityCylindricalZero: return "velocity-cylindrical-zero";
        case AxisIdentity::StrainDiagonalChain: return "strain-diagonal-chain";
        case AxisIdentity::SwirlGradientChain: return "swirl-gradient-chain";
        case AxisIdentity::PressureGradientZero: return "pressure-gradient-zero";
        case AxisIdentity::PressureHessianChain: return "pressure-hessian-chain";
    }
    return "unknown";
}

inline AxisIdentity identity_from_string(const std::string& s) {
    for (AxisIdentity id : all_identities) {
        if (s == to_string(id)) return id;
    }
    throw UnknownIdentity("no axis identity named '" + s + "'");
}

namespace detail {

// Point-value shorthands built on cartesian_eval only; the checker never
// touches profile derivatives directly for the on-axis identities.
struct Eval {
    const SyntheticField& f;

    double v1(double a, double b, double z) const { return cartesian_eval(f, a, b, z).v1; }
    double v2(double a, double b, double z) const { return cartesian_eval(f, a, b, z).v2; }
    double v3(double a, double b, double z) const { return cartesian_eval(f, a, b, z).v3; }
    double p(double a, double b, double z) const { return cartesian_eval(f, a, b, z).p; }
};

// Richardson extrapolation of a radius-indexed quantity to the axis.
template <class Fn>
double to_axis(Fn q, double h) {
    return 2.0 * q(h) - q(2.0 * h);
}

}  // namespace detail

/// Evaluate the named identity at the axis point (0, 0, z) with stencil
/// width h, using centered finite differences of cartesian_eval at radius-h
/// points plus parity-aware one-sided stencils for the r -> 0 limits.
/// Returns the largest absolute mismatch within the identity group.
inline double check_identity(const SyntheticField& f, AxisIdentity id, double z, double h) {
    if (!(h > 0.0) || h > 0.1) throw DomainError("check_identity: h must lie in (0, 0.1]");
    const detail::Eval e{f};
    const double d = h / 2.0;  // inner step for derivatives taken off-axis
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    switch (id) {
        case AxisIdentity::VelocityCartesianZero: {
            const auto q_v1 = [&](double rho) { return e.v1(rho, 0.0, z); };
            const auto q_v2 = [&](double rho) { return e.v2(0.0, rho, z); };
            const auto q_d3v1 = [&](double rho) {
                return (e.v1(rho, 0.0, z + d) - e.v1(rho, 0.0, z - d)) / (2.0 * d);
            };
            const auto q_d3v2 = [&](double rho) {
                return (e.v2(0.0, rho, z + d) - e.v2(0.0, rho, z - d)) / (2.0 * d);
            };
            const auto q_d1v3 = [&](double rho) {
                return (e.v3(rho + d, 0.0, z) - e.v3(rho - d, 0.0, z)) / (2.0 * d);
            };
            const auto q_d2v3 = [&](double rho) {
                return (e.v3(0.0, rho + d, z) - e.v3(0.0, rho - d, z)) / (2.0 * d);
            };
            double res = 0.0;
            res = std::max(res, std::abs(detail::to_axis(q_v1, h)));
            res = std::max(res, std::abs(detail::to_axis(q_v2, h)));
            res = std::max(res, std::abs(detail::to_axis(q_d3v1, h)));
            res = std::max(res, std::abs(detail::to_axis(q_d3v2, h)));
            res = std::max(res, std::abs(detail::to_axis(q_d1v3, h)));
            res = std::max(res, std::abs(detail::to_axis(q_d2v3, h)));
            return res;
        }
        case AxisIdentity::VelocityCylindricalZero: {
            // Radial/swirl components reconstructed from diagonal samples.
            const auto vr_hat = [&](double rho) {
                const double a = rho * inv_sqrt2;
                return (e.v1(a, a, z) + e.v2(a, a, z)) * inv_sqrt2;
            };
            const auto vt_hat = [&](double rho) {
                const double a = rho * inv_sqrt2;
                return -(e.v1(a, a, z) - e.v2(a, a, z)) * inv_sqrt2;
            };
            const auto d3vr = [&](double rho) {
                const double a = rho * inv_sqrt2;
                const auto at = [&](double zz) { return (e.v1(a, a, zz) + e.v2(a, a, zz)) * inv_sqrt2; };
                return (at(z + d) - at(z - d)) / (2.0 * d);
            };
            const auto d3vt = [&](double rho) {
                const double a = rho * inv_sqrt2;
                const auto at = [&](double zz) { return -(e.v1(a, a, zz) - e.v2(a, a, zz)) * inv_sqrt2; };
                return (at(z + d) - at(z - d)) / (2.0 * d);
            };
            const auto drv3 = [&](double rho) {
                const double ap = (rho + d) * inv_sqrt2, am = (rho - d) * inv_sqrt2;
                return (e.v3(ap, ap, z) - e.v3(am, am, z)) / (2.0 * d);
            };
            double res = 0.0;
            res = std::max(res, std::abs(detail::to_axis(vr_hat, h)));
            res = std::max(res, std::abs(detail::to_axis(vt_hat, h)));
            res = std::max(res, std::abs(detail::to_axis(d3vr, h)));
            res = std::max(res, std::abs(detail::to_axis(d3vt, h)));
            res = std::max(res, std::abs(detail::to_axis(drv3, h)));
            return res;
        }
        case AxisIdentity::StrainDiagonalChain: {
            const double a = (e.v1(h, 0.0, z) - e.v1(-h, 0.0, z)) / (2.0 * h);
            const double b = (e.v2(0.0, h, z) - e.v2(0.0, -h, z)) / (2.0 * h);
            const double c = -(e.v3(0.0, 0.0, z + h) - e.v3(0.0, 0.0, z - h)) / (4.0 * h);
            const double dr_vr = (e.v1(2.0 * h, 0.0, z) - e.v1(h, 0.0, z)) / h;
            const double lim_vr = e.v1(h, 0.0, z) / h;
            return std::max({std::abs(a - b), std::abs(b - c), std::abs(c - dr_vr),
                             std::abs(dr_vr - lim_vr)});
        }
        case AxisIdentity::SwirlGradientChain: {
            // On the x1 ray, v2 carries the swirl profile.
            const double a = (e.v2(h, 0.0, z) - e.v2(-h, 0.0, z)) / (2.0 * h);
            const double b = -(e.v1(0.0, h, z) - e.v1(0.0, -h, z)) / (2.0 * h);
            const double dr_vt = (e.v2(2.0 * h, 0.0, z) - e.v2(h, 0.0, z)) / h;
            const double lim_vt = e.v2(h, 0.0, z) / h;
            return std::max(
                {std::abs(a - b), std::abs(b - dr_vt), std::abs(dr_vt - lim_vt)});
        }
        case AxisIdentity::PressureGradientZero: {
            const auto d1p = [&](double rho) {
                return (e.p(rho + d, 0.0, z) - e.p(rho - d, 0.0, z)) / (2.0 * d);
            };
            const auto d2p = [&](double rho) {
                return (e.p(0.0, rho + d, z) - e.p(0.0, rho - d, z)) / (2.0 * d);
            };
            const auto d12p = [&](double rho) {
                const double a = rho * inv_sqrt2;
                return (e.p(a + d, a + d, z) - e.p(a + d, a - d, z) - e.p(a - d, a + d, z) +
                        e.p(a - d, a - d, z)) /
                       (4.0 * d * d);
            };
            const auto d13p = [&](double rho) {
                return (e.p(rho + d, 0.0, z + d) - e.p(rho + d, 0.0, z - d) -
                        e.p(rho - d, 0.0, z + d) + e.p(rho - d, 0.0, z - d)) /
                       (4.0 * d * d);
            };
            const auto d23p = [&](double rho) {
            return (e.p(0.0, rho + d, z + d) - e.p(0.0, rho + d, z - d) -
                        e.p(0.0, rho - d, z + d) + e.p(0.0, rho - d, z - d)) /
                       (4.0 * d * d);
            };
            const auto drp = [&](double rho) {
                const double ap = (rho + d) * inv_sqrt2, am = (rho - d) * inv_sqrt2;
                return (e.p(ap, ap, z) - e.p(am, am, z)) / (2.0 * d);
            };
            const auto drd3p = [&](double rho) {
                const double ap = (rho + d) * inv_sqrt2, am = (rho - d) * inv_sqrt2;
                const auto at = [&](double zz) { return (e.p(ap, ap, zz) - e.p(am, am, zz)) / (2.0 * d); };
                return (at(z + d) - at(z - d)) / (2.0 * d);
            };
            double res = 0.0;
            res = std::max(res, std::abs(detail::to_axis(d1p, h)));
            res = std::max(res, std::abs(detail::to_axis(d2p, h)));
            res = std::max(res, std::abs(detail::to_axis(d12p, h)));
            res = std::max(res, std::abs(detail::to_axis(d13p, h)));
            res = std::max(res, std::abs(detail::to_axis(d23p, h)));
            res = std::max(res, std::abs(detail::to_axis(drp, h)));
            res = std::max(res, std::abs(detail::to_axis(drd3p, h)));
            return res;
        }
        case AxisIdentity::PressureHessianChain: {
            const double p0 = e.p(0.0, 0.0, z);
            const double a = (e.p(h, 0.0, z) - 2.0 * p0 + e.p(-h, 0.0, z)) / (h * h);
            const double b = (e.p(0.0, h, z) - 2.0 * p0 + e.p(0.0, -h, z)) / (h * h);
            // lim (dr p)/r with dr p at radius h taken as a centered difference.
            const double c = (e.p(2.0 * h, 0.0, z) - p0) / (2.0 * h * h);
            // Parity fit through (h, 2h): exact for even quartics.
            const double dd =
                (16.0 * (e.p(h, 0.0, z) - p0) - (e.p(2.0 * h, 0.0, z) - p0)) / (6.0 * h * h);
            return std::max({std::abs(a - b), std::abs(b - c), std::abs(c - dd)});
        }
    }
    throw UnknownIdentity("unhandled identity id");
}

/// One row of a verification report: residual at h and h/2 plus the observed
/// convergence order (absent when either residual sits at rounding level).
struct IdentityCheck {
    AxisIdentity identity{};
    double z = 0.0;
    double h = 0.0;
    double residual = 0.0;       ///< at stencil width h
    double residual_half = 0.0;  ///< at stencil width h/2
    std::optional<double> order;
    bool suspect = false;
};

/// Level below which a residual is indistinguishable from rounding noise for
/// the given identity's stencils (second-derivative stencils amplify rounding
/// by 1/h^2, first-derivative ones by 1/h).
inline double residual_noise_floor(AxisIdentity id, double h) {
    const bool second_order_stencil = id == AxisIdentity::PressureGradientZero ||
                                      id == AxisIdentity::PressureHessianChain;
    return 3e-14 / (second_order_stencil ? h * h : h);
}

/// Run every identity at every z sample with the (h, h/2) pair. The order is
/// reported only when both residuals sit measurably above rounding noise; an
/// identity is flagged suspect when its measured order drops below 1.5.
inline std::vector<IdentityCheck> full_report(const SyntheticField& f,
                                              const std::vector<double>& z_samples, double h) {
    std::vector<IdentityCheck> out;
    out.reserve(z_samples.size() * all_identities.size());
    for (AxisIdentity id : all_identities) {
        for (double z : z_samples) {
            IdentityCheck row;
            row.identity = id;
            row.z = z;
            row.h = h;
            row.residual = check_identity(f, id, z, h);
            row.residual_half = check_identity(f, id, z, h / 2.0);
            if (row.residual > residual_noise_floor(id, h) &&
                row.residual_half > residual_noise_floor(id, h / 2.0)) {
                row.order = std::log2(row.residual / row.residual_half);
                row.suspect = *row.order < 1.5;
            }
            out.push_back(row);
        }
    }
    return out;
}

/// Residuals of the finite-radius rotation identities. These are algebraic
/// consequences of the cylindrical-to-Cartesian map and hold at every radius,
/// so they are exact up to rounding; any sign error in cartesian_eval shows
/// up as an O(1) violation.
struct RotationResiduals {
    std::array<double, 8> le{};
    double max_abs() const {
        double m = 0.0;
        for (double v : le) m = std::max(m, std::abs(v));
        return m;
    }
};

inline RotationResiduals rotation_map_residuals(const SyntheticField& f, double x1, double x2,
                                                double z, double delta = 1e-3) {
    const detail::Eval e{f};
    const double r = std::hypot(x1, x2);
    if (!(r > 0.0)) throw DomainError("rotation_map_residuals: need a point off the axis");
    const double a = r / std::sqrt(2.0);
    RotationResiduals out;
    // Quarter-turn value identities.
    out.le[0] = e.v1(-x2, x1, z) + e.v2(x1, x2, z);
    out.le[1] = e.v2(-x2, x1, z) - e.v1(x1, x2, z);
    // Diagonal-point reconstruction of the cylindrical components.
    out.le[2] = e.v1(a, a, z) + e.v2(a, a, z) - std::sqrt(2.0) * f.vr(r, z);
    out.le[3] = e.v1(a, a, z) - e.v2(a, a, z) + std::sqrt(2.0) * f.vtheta(r, z);
    // Quarter-turn derivative identities; the rotated stencil points carry
    // bitwise-identical radii, so these cancel to rounding as well.
    const auto c1 = [&](double p1, double p2, double zz) { return e.v1(p1, p2, zz); };
    const auto c2 = [&](double p1, double p2, double zz) { return e.v2(p1, p2, zz); };
    const auto c3 = [&](double p1, double p2, double zz) { return e.v3(p1, p2, zz); };
    const auto dx1 = [&](auto comp, double p1, double p2) {
        return (comp(p1 + delta, p2, z) - comp(p1 - delta, p2, z)) / (2.0 * delta);
    };
    const auto dx2 = [&](auto comp, double p1, double p2) {
        return (comp(p1, p2 + delta, z) - comp(p1, p2 - delta, z)) / (2.0 * delta);
    };
    out.le[4] = dx1(c3, -x2, x1) + dx2(c3, x1, x2);
    out.le[5] = dx2(c3, -x2, x1) - dx1(c3, x1, x2);
    out.le[6] = dx1(c1, -x2, x1) - dx2(c2, x1, x2);
    out.le[7] = dx1(c2, -x2, x1) + dx2(c1, x1, x2);
    return out;
}

/// Residuals of the finite-radius identities that relate Cartesian
/// derivatives at the pi/4 diagonal (and the transverse pressure Laplacian)
/// to radial derivatives of the profiles. Both sides are discretized
/// independently, so the residual converges at second order in delta instead
/// of vanishing exactly.
struct RadialLimitResiduals {
    double strain_diff = 0.0;   ///< (d1v1 - d2v2)(diag) vs vtheta/r - dr vtheta
    double strain_sum = 0.0;    ///< (d1v1 + d2v2)(diag) vs vr/r + dr vr
    double skew_sum = 0.0;      ///< (d2v1 + d1v2)(diag) vs -vr/r + dr vr
    double skew_diff = 0.0;     ///< (d2v1 - d1v2)(diag) vs -vtheta/r - dr vtheta
    double transverse_laplacian = 0.0;  ///< d1^2p + d2^2p vs (dr p)/r + dr^2 p
    double cross_pressure = 0.0;        ///< d1d2 p(diag) vs -(dr p)/(2r) + (dr^2 p)/2

    double max_abs() const {
        return std::max({std::abs(strain_diff), std::abs(strain_sum), std::abs(skew_sum),
                         std::abs(skew_diff), std::abs(transverse_laplacian),
                         std::abs(cross_pressure)});
    }
};

inline RadialLimitResiduals radial_limit_residuals(const SyntheticField& f, double r, double z,
                                                   double delta = 1e-3) {
    if (!(r > 0.0)) throw DomainError("radial_limit_residuals: need r > 0");
    const detail::Eval e{f};
    const double a = r / std::sqrt(2.0);

    const auto dx1 = [&](auto comp, double p1, double p2) {
        return (comp(p1 + delta, p2, z) - comp(p1 - delta, p2, z)) / (2.0 * delta);
    };
    const auto dx2 = [&](auto comp, double p1, double p2) {
        return (comp(p1, p2 + delta, z) - comp(p1, p2 - delta, z)) / (2.0 * delta);
    };
    const auto c1 = [&](double p1, double p2, double zz) { return e.v1(p1, p2, zz); };
    const auto c2 = [&](double p1, double p2, double zz) { return e.v2(p1, p2, zz); };
    const auto cp = [&](double p1, double p2, double zz) { return e.p(p1, p2, zz); };

    // 1D radial derivatives of the profiles, centered with the same delta.
    const auto dr1 = [&](const std::function<double(double, double)>& g) {
        return (g(r + delta, z) - g(r - delta, z)) / (2.0 * delta);
    };
    const auto dr2 = [&](const std::function<double(double, double)>& g) {
        return (g(r + delta, z) - 2.0 * g(r, z) + g(r - delta, z)) / (delta * delta);
    };

    RadialLimitResiduals out;
    const double d1v1 = dx1(c1, a, a), d2v2 = dx2(c2, a, a);
    const double d2v1 = dx2(c1, a, a), d1v2 = dx1(c2, a, a);
    const double vt = f.vtheta(r, z), vr = f.vr(r, z);
    const double drvt = dr1(f.vtheta), drvr = dr1(f.vr);
    out.strain_diff = (d1v1 - d2v2) - (vt / r - drvt);
    out.strain_sum = (d1v1 + d2v2) - (vr / r + drvr);
    out.skew_sum = (d2v1 + d1v2) - (-vr / r + drvr);
    out.skew_diff = (d2v1 - d1v2) - (-vt / r - drvt);

    const double d11p = (e.p(r + delta, 0.0, z) - 2.0 * e.p(r, 0.0, z) + e.p(r - delta, 0.0, z)) /
                        (delta * delta);
    const double d22p = (e.p(r, delta, z) - 2.0 * e.p(r, 0.0, z) + e.p(r, -delta, z)) /
                        (delta * delta);
    const double drp = dr1(f.p), drrp = dr2(f.p);
    out.transverse_laplacian = (d11p + d22p) - (drp / r + drrp);

    const double d12p = (cp(a + delta, a + delta, z) - cp(a + delta, a - delta, z) -
                         cp(a - delta, a + delta, z) + cp(a - delta, a - delta, z)) /
                        (4.0 * delta * delta);
    out.cross_pressure = d12p - (-drp / (2.0 * r) + 0.5 * drrp);
    return out;
}

/// Built-in fields used by the command-line suite and the tests.

/// Linear-in-r velocities, quadratic-in-r scalars, z-coefficients polynomial
/// of degree <= 2, divergence-free. Every stencil in the checker is exact on
/// this class, so residuals sit at rounding level.
inline SyntheticField make_polynomial_field() {
    SyntheticField f;
    f.name = "polynomial";
    f.vr = [](double r, double) { return 0.3 * r; };
    f.vtheta = [](double r, double z) { return (0.5 + 0.1 * z + 0.05 * z * z) * r; };
    f.vz = [](double r, double z) { return -0.6 * z + 0.25 * r * r; };
    f.p = [](double r, double z) {
        return (1.0 + 0.3 * z + 0.1 * z * z) + (0.7 - 0.2 * z + 0.1 * z * z) * r * r * 0.5;
    };
    f.divergence_free = true;
    return f;
}

/// Generic smooth wave: meridional part from a stream function (hence
/// divergence-free analytically), Gaussian radial envelopes.
inline SyntheticField make_wave_field() {
    SyntheticField f;
    f.name = "wave";
    // psi = sin(z) r^2 exp(-r^2); vr = -(1/r) dz psi, vz = (1/r) dr psi.
    f.vr = [](double r, double z) { return -std::cos(z) * r * std::exp(-r * r); };
    f.vz = [](double r, double z) { return std::sin(z) * (2.0 - 2.0 * r * r) * std::exp(-r * r); };
    f.vtheta = [](double r, double z) {
        return 0.7 * r * std::exp(-r * r) * (1.0 + 0.5 * std::sin(z));
    };
    f.p = [](double r, double z) {
        return (0.4 + 0.3 * std::cos(z)) * std::exp(-r * r) +
               0.2 * std::cos(2.0 * z) * r * r * std::exp(-r * r);
    };
    f.divergence_free = true;
    return f;
}

/// A second generic smooth field with different envelopes and phases.
inline SyntheticField make_spiral_field() {
    SyntheticField f;
    f.name = "spiral";
    // psi = cos(2z) r^2 (1 + r^2) exp(-1.3 r^2).
    f.vr = [](double r, double z) {
        return 2.0 * std::sin(2.0 * z) * r * (1.0 + r * r) * std::exp(-1.3 * r * r);
    };
    f.vz = [](double r, double z) {
        const double e = std::exp(-1.3 * r * r);
        // (1/r) dr [r^2 (1+r^2) e]
        return std::cos(2.0 * z) * e *
               (2.0 + 4.0 * r * r - 2.6 * r * r * (1.0 + r * r));
    };
    f.vtheta = [](double r, double z) {
        return r * (0.3 - 0.2 * std::cos(z)) * std::exp(-0.8 * r * r) * (1.0 + 0.3 * r * r);
    };
    f.p = [](double r, double z) {
        return 0.6 * std::sin(z) * (1.0 - r * r + 0.5 * r * r * r * r) * std::exp(-r * r) +
               0.2 * std::cos(z);
    };
    f.divergence_free = true;
    return f;
}

/// A third smooth parity-correct field, swirl-dominant.
inline SyntheticField make_swirl_field() {
    SyntheticField f;
    f.name = "swirl";
    // stream psi = 0.4 cos(z) r^2 exp(-2 r^2): vr = -(1/r) dz psi, vz = (1/r) dr psi
    f.vr = [](double r, double z) { return 0.4 * std::sin(z) * r * std::exp(-2.0 * r * r); };
    f.vz = [](double r, double z) {
        return 0.4 * std::cos(z) * (2.0 - 4.0 * r * r) * std::exp(-2.0 * r * r);
    };
    f.vtheta = [](double r, double z) {
        return r * std::exp(-r * r) * (1.2 + 0.4 * std::cos(2.0 * z));
    };
    f.p = [](double r, double z) {
        return 0.5 * std::exp(-1.5 * r * r) * (1.0 + 0.25 * std::sin(z)) + 0.1 * std::sin(2.0 * z);
    };
    f.divergence_free = true;
    return f;
}

/// Negative control: the swirl profile carries a constant term, so the field
/// is not a valid axisymmetric vector field near the axis.
inline SyntheticField make_parity_violating_field() {
    SyntheticField f;
    f.name = "parity-violating";
    f.vr = [](double r, double) { return 0.3 * r; };
    f.vtheta = [](double r, double) { return 0.1 + 0.4 * r; };
    f.vz = [](double r, double z) { return -0.6 * z + 0.2 * r * r; };
    f.p = [](double r, double z) { return 0.3 * r + 0.5 * r * r + 0.1 * z; };
    f.divergence_free = true;
    return f;
}

inline std::vector<SyntheticField> default_field_suite() {
    return {make_polynomial_field(), make_wave_field(), make_spiral_field(), make_swirl_field()};
}

inline SyntheticField field_by_name(const std::string& name) {
    for (auto& f : default_field_suite()) {
        if (f.name == name) return f;
    }
    if (name == "parity-violating") return make_parity_violating_field();
    throw DomainError("no built-in synthetic field named '" + name + "'");
}

}  // namespace axisflow::lemma
