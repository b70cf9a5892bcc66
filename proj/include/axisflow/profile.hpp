#pragma once

#include <cmath>
#include <functional>

#include "axisflow/errors.hpp"

namespace axisflow {

/// Initial on-axis data as functions of the axis label a: strain lambda0(a)
/// and axis vorticity omega0(a).
struct InitialProfile {
    std::function<double(double)> lambda0;
    std::function<double(double)> omega0;

    double eval_lambda0(double a) const {
        const double v = lambda0(a);
        if (!std::isfinite(v)) throw DomainError("lambda0 profile returned non-finite value");
        return v;
    }
    double eval_omega0(double a) const {
        const double v = omega0(a);
        if (!std::isfinite(v)) throw DomainError("omega0 profile returned non-finite value");
        return v;
    }
};

/// Membership of an axis point in the blow-up candidate sets.
/// InS requires omega0 = 0, lambda0 > 0 and q0 >= 0; InS0 drops the pressure
/// condition. InS implies InS0 membership.
enum class SetMembership { Neither, InS0, InS };

inline bool in_s0(SetMembership m) { return m == SetMembership::InS0 || m == SetMembership::InS; }
inline bool in_s(SetMembership m) { return m == SetMembership::InS; }

inline const char* to_string(SetMembership m) {
    switch (m) {
        case SetMembership::Neither: return "neither";
        case SetMembership::InS0: return "in_s0";
        case SetMembership::InS: return "in_s";
    }
    return "unknown";
}

/// Classify the axis point a given the initial pressure curvature q0 there.
/// The zero test on omega0 matches blowup_time's (effectively exact).
inline SetMembership classify_initial_point(const InitialProfile& profile, double a, double q0) {
    if (!std::isfinite(q0)) throw DomainError("classify_initial_point: non-finite q0");
    const double l0 = profile.eval_lambda0(a);
    const double w0 = profile.eval_omega0(a);
    if (std::abs(w0) <= 1e-300 && l0 > 0.0) {
        return q0 >= 0.0 ? SetMembership::InS : SetMembership::InS0;
    }
    return SetMembership::Neither;
}

}  // namespace axisflow
