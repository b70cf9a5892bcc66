#pragma once

#include <cmath>
#include <complex>

#include "axisflow/errors.hpp"

namespace axisflow {

/// State of the reduced on-axis dynamics: axial strain and axis vorticity.
///
/// `lambda` is the on-axis velocity gradient along the axis (units 1/time);
/// `omega_bar` is the axial vorticity component on the axis (units 1/time).
struct AxisState {
    double lambda = 0.0;
    double omega_bar = 0.0;

    AxisState() = default;
    AxisState(double lambda_, double omega_bar_) : lambda(lambda_), omega_bar(omega_bar_) {
        if (!std::isfinite(lambda) || !std::isfinite(omega_bar)) {
            throw DomainError("AxisState requires finite components");
        }
    }

    double max_abs() const { return std::max(std::abs(lambda), std::abs(omega_bar)); }
};

/// The complex combination Theta = lambda + i*omega_bar used by the
/// closed-form solution. Bijective with AxisState.
struct ThetaValue {
    double re = 0.0;
    double im = 0.0;

    ThetaValue() = default;
    ThetaValue(double re_, double im_) : re(re_), im(im_) {
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw DomainError("ThetaValue requires finite components");
        }
    }
    explicit ThetaValue(const AxisState& s) : re(s.lambda), im(s.omega_bar) {}

    AxisState to_state() const { return AxisState(re, im); }
    std::complex<double> to_complex() const { return {re, im}; }
};

/// Unforced right-hand side: d(lambda)/dt = (lambda^2 - omega_bar^2)/2,
/// d(omega_bar)/dt = lambda*omega_bar. Returned as a derivative pair.
inline AxisState clm_rhs(const AxisState& s) {
    return AxisState(0.5 * (s.lambda * s.lambda - s.omega_bar * s.omega_bar),
                     s.lambda * s.omega_bar);
}

/// Right-hand side with radial pressure-curvature forcing q = second radial
/// derivative of the pressure on the axis. With q = 0 this is clm_rhs.
inline AxisState forced_rhs(const AxisState& s, double q) {
    if (!std::isfinite(q)) throw DomainError("forced_rhs: non-finite forcing");
    return AxisState(0.5 * (s.lambda * s.lambda - s.omega_bar * s.omega_bar) + 2.0 * q,
                     s.lambda * s.omega_bar);
}

/// Alternative evolution of the axial strain driven by the axial pressure
/// curvature p33 = second axial derivative of p on the axis:
/// d(lambda)/dt = -lambda^2 - p33. Used for PDE consistency checks only.
inline double forced_rhs_axial(const AxisState& s, double p33) {
    if (!std::isfinite(p33)) throw DomainError("forced_rhs_axial: non-finite p33");
    return -s.lambda * s.lambda - p33;
}

/// First integral (lambda^2 + omega_bar^2)/omega_bar of the unforced system.
/// Constant along exact trajectories with omega_bar != 0.
inline double invariant_Q(const AxisState& s) {
    if (s.omega_bar == 0.0) throw DomainError("invariant_Q undefined at omega_bar = 0");
    return (s.lambda * s.lambda + s.omega_bar * s.omega_bar) / s.omega_bar;
}

}  // namespace axisflow
