#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tailsim {

struct RampEval {
    double value;
    double slope;
};

/// Arctangent blend ramp: identity up to the linear limit L, then a smooth
/// arctan section that approaches (but never reaches) the bound M.
///
/// For s in [0, L]:  value = s,                           slope = 1
/// For s > L:        value = L + atan(a*(s-L))/a,         slope = 1/(1 + a^2 (s-L)^2)
/// with a = pi / (2*(M - L)).
///
/// The junction at s = L is C1 (value and slope both continuous), and
/// value < M holds for every finite s.
struct RampSpec {
    double linear_limit = 0.0;  // L: end of the identity region
    double bound = 0.0;         // M: asymptotic maximum, L <= M

    double blend_rate() const {  // a = pi / (2*(M-L)); only valid for L < M
        return std::numbers::pi / (2.0 * (bound - linear_limit));
    }

    bool valid() const {
        return std::isfinite(linear_limit) && std::isfinite(bound) &&
               linear_limit > 0.0 && linear_limit <= bound;
    }

    // Evaluate for s >= 0. A degenerate L == M ramp clips hard at M
    // (not C1); config validation rejects it for trajectory use.
    RampEval eval(double s) const {
        if (linear_limit == bound) {
            return s < bound ? RampEval{s, 1.0} : RampEval{bound, 0.0};
        }
        if (s <= linear_limit) {
            return {s, 1.0};
        }
        const double a = blend_rate();
        const double span = bound - linear_limit;
        const double y = a * (s - linear_limit);
        double value;
        if (y <= 1.0) {
            value = linear_limit + std::atan(y) / a;
        } else {
            // Equivalent form M - (2*span/pi)*atan(1/y); keeps value < M
            // in floating point even for huge s.
            value = bound - (2.0 * span / std::numbers::pi) * std::atan(1.0 / y);
        }
        return {value, 1.0 / (1.0 + y * y)};
    }
};

/// Odd saturation built from the same arctan blend:
///   (a) s*sigma(s) > 0 for s != 0
///   (b) |sigma(s)| <= M for all s
///   (c) sigma(s) = s for |s| <= L
/// Continuous, non-decreasing, and C1 everywhere.
struct SaturationFn {
    double linear_limit = 0.0;  // L_s
    double bound = 0.0;         // M_s, L_s <= M_s

    bool valid() const {
        return RampSpec{linear_limit, bound}.valid();
    }

    double operator()(double s) const {
        if (s == 0.0) return 0.0;
        const double v = RampSpec{linear_limit, bound}.eval(std::fabs(s)).value;
        return std::copysign(v, s);
    }
};

}  // namespace tailsim
