#pragma once

#include "tailsim/saturation.hpp"

namespace tailsim {

enum class TransitionDirection {
    hover_to_cruise,
    cruise_to_hover,
};

/// Reference state and exact analytic first derivatives at one instant.
/// w_d = u_d * tan(alpha_d) by construction.
struct ReferenceSample {
    double u_d = 0.0;       // m/s
    double du_d = 0.0;      // m/s^2
    double alpha_d = 0.0;   // rad
    double dalpha_d = 0.0;  // rad/s
    double w_d = 0.0;       // m/s
    double dw_d = 0.0;      // m/s^2
};

/// Profile generator settings. The forward (hover-to-cruise) profile is
///   u_d(t)     = ramp_u(t / u_time_scale)
///   alpha_d(t) = ramp_alpha(t)            [evaluated in degrees, slope 1 deg/s]
///   w_d(t)     = u_d(t) * tan(alpha_d(t))
/// The cruise-to-hover profile samples the forward one at
/// (mirror_duration - t) with derivatives negated, clamped to the hover
/// references (all zero) once t passes mirror_duration.
struct TrajectoryParams {
    TransitionDirection direction = TransitionDirection::hover_to_cruise;
    RampSpec u_ramp{0.7, 1.0};        // m/s
    RampSpec alpha_ramp_deg{4.0, 6.0};// degrees
    double u_time_scale = 5.0;        // s; divisor on t in the u_d ramp
    double mirror_duration = 30.0;    // s; cruise-to-hover maneuver time

    bool valid() const {
        return u_ramp.valid() && alpha_ramp_deg.valid() && u_time_scale > 0.0 &&
               mirror_duration > 0.0 &&
               u_ramp.linear_limit < u_ramp.bound &&
               alpha_ramp_deg.linear_limit < alpha_ramp_deg.bound;
    }
};

/// Sample the reference profiles at time t >= 0 (negative t throws
/// std::invalid_argument).
ReferenceSample reference_at(const TrajectoryParams& params, double t);

}  // namespace tailsim
