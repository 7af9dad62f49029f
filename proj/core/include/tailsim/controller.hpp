#pragma once

#include <limits>

#include "tailsim/dynamics.hpp"
#include "tailsim/saturation.hpp"
#include "tailsim/trajectory.hpp"

namespace tailsim {

struct ControllerGains {
    double k_theta = 5.0;  // pitch gain (1/s^2)
    double k_q = 3.0;      // rate gain (1/s)
    SaturationFn sigma1{0.9, 1.0};  // vertical-velocity error
    SaturationFn sigma2{0.9, 1.0};  // virtual control; bound must be <= 1
    SaturationFn sigma3{0.9, 1.0};  // forward-velocity error
    double tau_f = 0.05;   // rate-reference filter time constant (s)

    bool valid() const {
        return k_theta > 0.0 && k_q > 0.0 && tau_f > 0.0 &&
               sigma1.valid() && sigma2.valid() && sigma3.valid() &&
               sigma2.bound <= 1.0;
    }
};

struct AllocationConfig {
    double motor_share = 1.0;  // beta in [0,1]: torque fraction sent to motors
    double diff_max = std::numeric_limits<double>::infinity();  // clamp on T1-T2
    bool clamp_thrust = false; // clamp negative total thrust at 0 and flag it
};

struct Allocation {
    double t1 = 0.0;
    double t2 = 0.0;
    double aileron_share = 0.0;  // torque left to surfaces; logged, not simulated
};

/// Full controller output for one sample.
struct ControlInput {
    double thrust = 0.0;   // total mass-normalized thrust T = t1 + t2
    double torque = 0.0;   // inertia-normalized pitch torque
    Allocation allocation;
    double epsilon = 0.0;  // virtual control, |epsilon| <= 1
    double theta_d = 0.0;  // pitch reference (rad)
    double q_d = 0.0;      // pitch-rate reference (rad/s)
    double qdot_d = 0.0;   // pitch-acceleration feedforward (rad/s^2)
    bool thrust_clamped = false;
};

/// eps = -sigma2(f2(u,w,q) + sigma1(w - w_d) - dw_d). Always within
/// (-sigma2.bound, sigma2.bound), hence within [-1, 1].
double virtual_epsilon(const VehicleState& state, const ReferenceSample& ref,
                       const AeroModel& aero, const PhysicalParams& params,
                       const ControllerGains& gains);

/// theta_d = acos(eps) in [0, pi]. Requires |eps| <= 1 (plus a hair of
/// round-off); anything further out throws std::logic_error since the
/// saturation bound should make it unreachable.
double pitch_reference(double epsilon);

/// T = -sigma3(u - u_d) + g*sqrt(1 - eps^2) - f1(u,w,q) + du_d.
/// May be negative; clamping is the allocator's concern.
double thrust_command(const VehicleState& state, const ReferenceSample& ref,
                      double epsilon, const AeroModel& aero,
                      const PhysicalParams& params, const ControllerGains& gains);

/// tau = -k_theta*(theta - theta_d) - k_q*(q - q_d) + qdot_d.
double torque_command(const VehicleState& state, double theta_d, double q_d,
                      double qdot_d, const ControllerGains& gains);

/// Split (T, tau) into per-rotor thrusts plus an aileron share:
///   d  = clamp(motor_share * tau, -diff_max, diff_max)
///   T1 = T/2 + d/2,  T2 = T/2 - d/2,  aileron_share = tau - d
/// T1 + T2 == T up to one rounding.
Allocation allocate(double thrust, double torque, const AllocationConfig& config);

/// Causal estimate of the first and second derivatives of theta_d: two
/// cascaded first-order lags with time constant tau_f, differentiated
/// algebraically. Outputs are zero at the first sample.
class RateReferenceFilter {
  public:
    explicit RateReferenceFilter(double tau_f = 0.05) : tau_f_(tau_f) {}

    struct Rates {
        double q_d = 0.0;
        double qdot_d = 0.0;
    };

    /// Advance one control period of length dt (0 < dt <= tau_f).
    Rates update(double theta_d, double dt);
    void reset();

  private:
    double tau_f_;
    double z1_ = 0.0;
    double z2_ = 0.0;
    bool primed_ = false;
};

/// One controller instance per simulation loop; the rate filter is the only
/// state it carries.
class TransitionController {
  public:
    TransitionController(ControllerGains gains, AllocationConfig allocation = {})
        : gains_(gains), allocation_(allocation), filter_(gains.tau_f) {}

    ControlInput step(const VehicleState& state, const ReferenceSample& ref,
                      const AeroModel& aero, const PhysicalParams& params,
                      double dt);

    void reset() { filter_.reset(); }
    const ControllerGains& gains() const { return gains_; }
    const AllocationConfig& allocation_config() const { return allocation_; }

  private:
    ControllerGains gains_;
    AllocationConfig allocation_;
    RateReferenceFilter filter_;
};

}  // namespace tailsim
