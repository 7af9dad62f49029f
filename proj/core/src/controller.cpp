#include "tailsim/controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tailsim {

double virtual_epsilon(const VehicleState& state, const ReferenceSample& ref,
                       const AeroModel& aero, const PhysicalParams& params,
                       const ControllerGains& gains) {
    const double f2 = f1_f2(state, aero, params).second;
    return -gains.sigma2(f2 + gains.sigma1(state.w - ref.w_d) - ref.dw_d);
}

double pitch_reference(double epsilon) {
    if (std::fabs(epsilon) > 1.0 + 1e-12 || !std::isfinite(epsilon)) {
        throw std::logic_error("pitch_reference: |epsilon| > 1 (" +
                               std::to_string(epsilon) +
                               "); sigma2 bound should make this unreachable");
    }
    return std::acos(std::clamp(epsilon, -1.0, 1.0));
}

double thrust_command(const VehicleState& state, const ReferenceSample& ref,
                      double epsilon, const AeroModel& aero,
                      const PhysicalParams& params, const ControllerGains& gains) {
    const double f1 = f1_f2(state, aero, params).first;
    const double vertical = std::sqrt(std::max(0.0, 1.0 - epsilon * epsilon));
    return -gains.sigma3(state.u - ref.u_d) + params.g * vertical - f1 + ref.du_d;
}

double torque_command(const VehicleState& state, double theta_d, double q_d,
                      double qdot_d, const ControllerGains& gains) {
    return -gains.k_theta * (state.theta - theta_d) - gains.k_q * (state.q - q_d) +
           qdot_d;
}

Allocation allocate(double thrust, double torque, const AllocationConfig& config) {
    const double d =
        std::clamp(config.motor_share * torque, -config.diff_max, config.diff_max);
    Allocation out;
    out.t1 = 0.5 * (thrust + d);
    out.t2 = 0.5 * (thrust - d);
    out.aileron_share = torque - d;
    return out;
}

RateReferenceFilter::Rates RateReferenceFilter::update(double theta_d, double dt) {
    if (!(dt > 0.0) || dt > tau_f_) {
        throw std::invalid_argument("RateReferenceFilter: need 0 < dt <= tau_f (dt=" +
                                    std::to_string(dt) + ", tau_f=" +
                                    std::to_string(tau_f_) + ")");
    }
    if (!primed_) {
        z1_ = z2_ = theta_d;
        primed_ = true;
    }
    const double beta = 1.0 - std::exp(-dt / tau_f_);
    // Discrete-consistent stage constant (the update uses the current sample,
    // hence the 1-beta): a ramp input is tracked with zero steady-state bias.
    const double tau_eff = dt * (1.0 - beta) / beta;
    z1_ += beta * (theta_d - z1_);
    z2_ += beta * (z1_ - z2_);
    Rates out;
    out.q_d = (z1_ - z2_) / tau_eff;
    out.qdot_d = ((theta_d - z1_) / tau_eff - (z1_ - z2_) / tau_eff) / tau_eff;
    return out;
}

void RateReferenceFilter::reset() {
    primed_ = false;
    z1_ = z2_ = 0.0;
}

ControlInput TransitionController::step(const VehicleState& state,
                                        const ReferenceSample& ref,
                                        const AeroModel& aero,
                                        const PhysicalParams& params, double dt) {
    ControlInput out;
    out.epsilon = virtual_epsilon(state, ref, aero, params, gains_);
    out.theta_d = pitch_reference(out.epsilon);
    const RateReferenceFilter::Rates rates = filter_.update(out.theta_d, dt);
    out.q_d = rates.q_d;
    out.qdot_d = rates.qdot_d;
    out.thrust = thrust_command(state, ref, out.epsilon, aero, params, gains_);
    if (allocation_.clamp_thrust && out.thrust < 0.0) {
        out.thrust = 0.0;
        out.thrust_clamped = true;
    }
    out.torque = torque_command(state, out.theta_d, out.q_d, out.qdot_d, gains_);
    out.allocation = allocate(out.thrust, out.torque, allocation_);
    return out;
}

}  // namespace tailsim
