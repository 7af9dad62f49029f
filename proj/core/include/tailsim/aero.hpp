#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tailsim {

struct Coefficients {
    double cl = 0.0;
    double cd = 0.0;
};

/// Polar file / table problems (parse errors, bad ordering, coverage).
struct PolarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolarSample {
    double alpha_deg = 0.0;
    double cl = 0.0;
    double cd = 0.0;
};

/// Descriptive polar provenance; carried along but never consulted by the
/// controller (torque allocation abstracts the surfaces).
struct PolarMetadata {
    std::string airfoil;
    double reynolds = 0.0;                // 0 = unspecified
    double aileron_deflection_deg = 0.0;
};

/// Tabulated airfoil polar with linear interpolation between samples.
/// Rows are strictly increasing in alpha; no extrapolation outside the
/// sampled range (queries out of range throw).
class PolarTable {
  public:
    PolarTable() = default;
    explicit PolarTable(std::vector<PolarSample> rows, PolarMetadata metadata = {});

    /// Parse the CSV polar format: header `alpha_deg,cl,cd`, one sample per
    /// line, '.' decimal separator, rows sorted ascending by alpha_deg.
    static PolarTable from_csv_file(const std::string& path);
    static PolarTable from_csv(std::istream& in, const std::string& origin = "<stream>");

    /// Linear interpolation at alpha (radians). Throws std::out_of_range
    /// naming the table bounds when alpha is outside the sampled range;
    /// radian->degree round-off at the very edge is forgiven.
    Coefficients coefficients(double alpha_rad) const;

    /// Same lookup in the table's native degree domain. Evaluating exactly
    /// at a sample returns that sample bit for bit.
    Coefficients coefficients_deg(double alpha_deg) const;

    bool covers(double lo_deg, double hi_deg) const;
    double min_alpha_deg() const { return rows_.front().alpha_deg; }
    double max_alpha_deg() const { return rows_.back().alpha_deg; }
    const std::vector<PolarSample>& rows() const { return rows_; }
    const PolarMetadata& metadata() const { return metadata_; }

  private:
    void validate() const;

    std::vector<PolarSample> rows_;
    PolarMetadata metadata_;
};

/// Smooth full-envelope model for a symmetric airfoil:
///   C_L(a) = lift_gain * sin(2a)
///   C_D(a) = drag_floor + drag_rise * sin^2(a)
/// The default drag_floor is derived so the lift-to-drag optimum falls at
/// exactly 6 degrees; see optimum_alpha_rad().
struct AnalyticPolar {
    double lift_gain = 1.1;    // peak C_L at 45 deg
    double drag_rise = 1.35;   // flat-plate drag at 90 deg, minus the floor
    double drag_floor = default_drag_floor(1.35);

    static double default_drag_floor(double drag_rise, double optimum_deg = 6.0);

    Coefficients coefficients(double alpha_rad) const;

    /// Closed-form argmax of C_L/C_D for this model:
    ///   alpha* = asin(sqrt(drag_floor / (drag_rise + 2*drag_floor)))
    double optimum_alpha_rad() const;

    bool valid() const {
        return lift_gain > 0.0 && drag_floor > 0.0 && drag_rise >= 0.0;
    }
};

using CoefficientProvider = std::variant<AnalyticPolar, PolarTable>;

Coefficients coefficients(const CoefficientProvider& provider, double alpha_rad);
/// Degree-domain evaluation: tables look up natively, the analytic model
/// converts. Used by the grid optimizer so table samples are hit exactly.
Coefficients coefficients_deg(const CoefficientProvider& provider, double alpha_deg);

/// Air density, reference area and coefficient source. Forces produced from
/// this model are mass-normalized, so K = rho*S/2 carries units of 1/m.
struct AeroModel {
    double rho = 1.225;      // air density (kg/m^3)
    double wing_area = 1.0;  // reference area (m^2, per unit mass)
    CoefficientProvider provider = AnalyticPolar{};

    double K() const { return 0.5 * rho * wing_area; }
    bool valid() const { return rho > 0.0 && wing_area > 0.0; }
};

struct LiftDrag {
    double lift = 0.0;  // N/kg
    double drag = 0.0;  // N/kg
};

/// L = K C_L V^2, D = K C_D V^2; both zero below the airspeed floor.
LiftDrag aero_forces(const AeroModel& model, double airspeed, double alpha_rad,
                     double airspeed_floor = 0.0);

/// Argmax of C_L/C_D over a dense grid of [lo_deg, hi_deg] with the given
/// resolution. Ties break toward the smallest alpha. Returns degrees.
/// Throws std::invalid_argument for an empty or degenerate range.
double optimal_aoa_deg(const CoefficientProvider& provider, double lo_deg,
                       double hi_deg, double resolution_deg = 0.01);

/// The polar shipped with the simulator: the analytic symmetric-airfoil
/// model sampled every 0.5 deg over [-10, 90] deg, with a sample pinned at
/// the 6 deg lift-to-drag optimum.
PolarTable default_polar_table();

}  // namespace tailsim
