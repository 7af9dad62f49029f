#include "tailsim/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tailsim {

bool VehicleState::finite() const {
    return std::isfinite(u) && std::isfinite(w) && std::isfinite(theta) &&
           std::isfinite(q);
}

double airspeed(const VehicleState& state) {
    return std::hypot(state.u, state.w);
}

double angle_of_attack(const VehicleState& state, const PhysicalParams& params) {
    if (airspeed(state) < params.airspeed_floor) return 0.0;
    return std::atan2(state.w, state.u);
}

ForceSet evaluate_forces(const VehicleState& state, const AeroModel& aero,
                         const PhysicalParams& params) {
    ForceSet out;
    out.airspeed = airspeed(state);
    out.alpha = angle_of_attack(state, params);
    const LiftDrag f =
        aero_forces(aero, out.airspeed, out.alpha, params.airspeed_floor);
    out.lift = f.lift;
    out.drag = f.drag;
    return out;
}

StateRates dynamics_rhs(const VehicleState& state, double thrust, double torque,
                        const AeroModel& aero, const PhysicalParams& params) {
    if (!state.finite() || !std::isfinite(thrust) || !std::isfinite(torque)) {
        std::ostringstream msg;
        msg << "dynamics_rhs: non-finite input (u=" << state.u << " w=" << state.w
            << " theta=" << state.theta << " q=" << state.q << " T=" << thrust
            << " tau=" << torque << ")";
        throw std::invalid_argument(msg.str());
    }
    const ForceSet f = evaluate_forces(state, aero, params);
    const double sa = std::sin(f.alpha);
    const double ca = std::cos(f.alpha);
    StateRates rates;
    rates.du = -f.drag * ca + f.lift * sa + thrust - params.g * std::sin(state.theta) -
               state.q * state.w;
    rates.dw = -f.drag * sa - f.lift * ca + params.g * std::cos(state.theta) +
               state.q * state.u;
    rates.dtheta = state.q;
    rates.dq = torque;
    return rates;
}

std::pair<double, double> f1_f2(const VehicleState& state, const AeroModel& aero,
                                const PhysicalParams& params) {
    const ForceSet f = evaluate_forces(state, aero, params);
    const double sa = std::sin(f.alpha);
    const double ca = std::cos(f.alpha);
    const double f1 = -f.drag * ca + f.lift * sa - state.q * state.w;
    const double f2 = -f.drag * sa - f.lift * ca + state.q * state.u;
    return {f1, f2};
}

}  // namespace tailsim
