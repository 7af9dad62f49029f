#pragma once

#include <utility>

#include "tailsim/aero.hpp"

namespace tailsim {

/// Planar (body x-z) vehicle state.
struct VehicleState {
    double u = 0.0;      // body-x velocity (m/s)
    double w = 0.0;      // body-z velocity (m/s)
    double theta = 0.0;  // pitch angle (rad), kept in [-pi, pi]
    double q = 0.0;      // pitch rate (rad/s)

    bool finite() const;
};

struct PhysicalParams {
    double g = 9.81;              // gravitational acceleration (m/s^2)
    double airspeed_floor = 0.01; // V below this zeroes aerodynamic forces (m/s)

    bool valid() const { return g > 0.0 && airspeed_floor >= 0.0; }
};

/// Mass-normalized force snapshot at one state.
struct ForceSet {
    double lift = 0.0;     // N/kg
    double drag = 0.0;     // N/kg
    double thrust = 0.0;   // N/kg, filled in by whoever owns the control
    double alpha = 0.0;    // angle of attack (rad)
    double airspeed = 0.0; // V = sqrt(u^2 + w^2) (m/s)
};

struct StateRates {
    double du = 0.0;
    double dw = 0.0;
    double dtheta = 0.0;
    double dq = 0.0;
};

double airspeed(const VehicleState& state);

/// Angle of attack: two-argument arctangent of (w, u). Returns 0 below the
/// airspeed floor, where aerodynamic forces are zeroed anyway.
double angle_of_attack(const VehicleState& state, const PhysicalParams& params);

/// Lift, drag, alpha and V at a state (thrust left at 0).
ForceSet evaluate_forces(const VehicleState& state, const AeroModel& aero,
                         const PhysicalParams& params);

/// Right-hand side of the planar dynamics, all terms mass/inertia-normalized:
///   du     = -D cos(a) + L sin(a) + T - g sin(theta) - q w
///   dw     = -D sin(a) - L cos(a) + g cos(theta) + q u
///   dtheta = q
///   dq     = tau
/// Throws std::invalid_argument on non-finite state or inputs.
StateRates dynamics_rhs(const VehicleState& state, double thrust, double torque,
                        const AeroModel& aero, const PhysicalParams& params);

/// Aerodynamic/rotational parts of the translational equations:
///   f1 = -D cos(a) + L sin(a) - q w
///   f2 = -D sin(a) - L cos(a) + q u
/// so that du = f1 + T - g*sqrt(1 - eps^2) and dw = f2 + g*eps with
/// eps = cos(theta), valid on theta in [0, pi].
std::pair<double, double> f1_f2(const VehicleState& state, const AeroModel& aero,
                                const PhysicalParams& params);

}  // namespace tailsim
