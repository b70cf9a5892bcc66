#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "axisflow/errors.hpp"

namespace axisflow {

/// Interpolation rule for tabulated forcing samples.
enum class ForcingInterp { MonotoneCubic, Linear };

/// Radial pressure curvature q(t) = second radial pressure derivative on the
/// axis, supplied along a trajectory. One of: a constant, a table of
/// (t_i, q_i) samples with an interpolation rule, or an arbitrary callable.
///
/// Tabulated forcing uses a monotone cubic Hermite interpolant by default so
/// that interpolation never overshoots the data and cannot inject spurious
/// sign changes into q.
class PressureForcing {
public:
    static PressureForcing constant(double q) {
        if (!std::isfinite(q)) throw DomainError("constant forcing must be finite");
        PressureForcing f;
        f.constant_ = q;
        f.kind_ = Kind::Constant;
        return f;
    }

    static PressureForcing zero() { return constant(0.0); }

    static PressureForcing callable(std::function<double(double)> fn) {
        PressureForcing f;
        f.fn_ = std::move(fn);
        f.kind_ = Kind::Callable;
        return f;
    }

    static PressureForcing tabulated(std::vector<double> times, std::vector<double> values,
                                     ForcingInterp interp = ForcingInterp::MonotoneCubic) {
        if (times.size() != values.size() || times.size() < 2) {
            throw DomainError("tabulated forcing needs matching time/value lists, size >= 2");
        }
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (!std::isfinite(times[i]) || !std::isfinite(values[i])) {
                throw DomainError("tabulated forcing entries must be finite");
            }
            if (i > 0 && !(times[i] > times[i - 1])) {
                throw DomainError("tabulated forcing times must be strictly increasing");
            }
        }
        PressureForcing f;
        f.kind_ = Kind::Tabulated;
        f.interp_ = interp;
        f.t_ = std::move(times);
        f.q_ = std::move(values);
        if (interp == ForcingInterp::MonotoneCubic) f.build_slopes();
        return f;
    }

    double operator()(double t) const {
        switch (kind_) {
            case Kind::Constant:
                return constant_;
            case Kind::Callable: {
                const double v = fn_(t);
                if (!std::isfinite(v)) throw DomainError("forcing callable returned non-finite value");
                return v;
            }
            case Kind::Tabulated:
                return eval_table(t);
        }
        return 0.0;
    }

private:
    enum class Kind { Constant, Callable, Tabulated };

    // Shape-preserving slopes (Fritsch-Carlson / PCHIP family).
    void build_slopes() {
        const std::size_t n = t_.size();
        m_.assign(n, 0.0);
        std::vector<double> h(n - 1), d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            h[i] = t_[i + 1] - t_[i];
            d[i] = (q_[i + 1] - q_[i]) / h[i];
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0) {
                m_[i] = 0.0;
            } else {
                const double w1 = 2.0 * h[i] + h[i - 1];
                const double w2 = h[i] + 2.0 * h[i - 1];
                m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
        m_[0] = endpoint_slope(h[0], n > 2 ? h[1] : h[0], d[0], n > 2 ? d[1] : d[0]);
        m_[n - 1] = endpoint_slope(h[n - 2], n > 2 ? h[n - 3] : h[n - 2], d[n - 2],
                                   n > 2 ? d[n - 3] : d[n - 2]);
    }

    static double endpoint_slope(double h0, double h1, double d0, double d1) {
        double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m * d0 <= 0.0) {
            m = 0.0;
        } else if (d0 * d1 <= 0.0 && std::abs(m) > 3.0 * std::abs(d0)) {
            m = 3.0 * d0;
        }
        return m;
    }

    double eval_table(double t) const {
        const double span = t_.back() - t_.front();
        const double slack = 1e-12 * std::max(1.0, std::abs(span));
        if (t < t_.front() - slack || t > t_.back() + slack) {
            throw DomainError("forcing evaluated outside its tabulated interval");
        }
        t = std::clamp(t, t_.front(), t_.back());
        const auto it = std::upper_bound(t_.begin(), t_.end(), t);
        std::size_t i = (it == t_.begin()) ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
        if (i + 1 >= t_.size()) i = t_.size() - 2;
        const double h = t_[i + 1] - t_[i];
        const double s = (t - t_[i]) / h;
        if (interp_ == ForcingInterp::Linear) {
            return q_[i] + s * (q_[i + 1] - q_[i]);
        }
        // Cubic Hermite basis.
        const double s2 = s * s, s3 = s2 * s;
        return (2 * s3 - 3 * s2 + 1) * q_[i] + (s3 - 2 * s2 + s) * h * m_[i] +
               (-2 * s3 + 3 * s2) * q_[i + 1] + (s3 - s2) * h * m_[i + 1];
    }

    Kind kind_ = Kind::Constant;
    double constant_ = 0.0;
    std::function<double(double)> fn_;
    ForcingInterp interp_ = ForcingInterp::MonotoneCubic;
    std::vector<double> t_, q_, m_;
};

}  // namespace axisflow
