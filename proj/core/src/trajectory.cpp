#include "tailsim/trajectory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tailsim/angles.hpp"

namespace tailsim {

namespace {

ReferenceSample forward_sample(const TrajectoryParams& params, double t) {
    ReferenceSample out;
    const RampEval u = params.u_ramp.eval(t / params.u_time_scale);
    out.u_d = u.value;
    out.du_d = u.slope / params.u_time_scale;

    // The alpha ramp runs in degrees with slope 1 deg/s in its linear region.
    const RampEval a = params.alpha_ramp_deg.eval(t);
    out.alpha_d = deg2rad(a.value);
    out.dalpha_d = deg2rad(a.slope);

    const double tan_a = std::tan(out.alpha_d);
    const double cos_a = std::cos(out.alpha_d);
    out.w_d = out.u_d * tan_a;
    out.dw_d = out.du_d * tan_a + out.u_d * out.dalpha_d / (cos_a * cos_a);
    return out;
}

}  // namespace

ReferenceSample reference_at(const TrajectoryParams& params, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("reference_at: negative time " + std::to_string(t));
    }
    if (params.direction == TransitionDirection::hover_to_cruise) {
        return forward_sample(params, t);
    }
    // Mirror in time; hold the hover references once the maneuver completes.
    const double remaining = params.mirror_duration - t;
    if (remaining <= 0.0) return ReferenceSample{};
    ReferenceSample out = forward_sample(params, remaining);
    out.du_d = -out.du_d;
    out.dalpha_d = -out.dalpha_d;
    out.dw_d = -out.dw_d;
    return out;
}

}  // namespace tailsim
