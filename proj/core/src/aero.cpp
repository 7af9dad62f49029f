#include "tailsim/aero.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "tailsim/angles.hpp"

namespace tailsim {

namespace {

// Locale-independent double parse of a full token.
bool parse_double(std::string_view token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

PolarTable::PolarTable(std::vector<PolarSample> rows, PolarMetadata metadata)
    : rows_(std::move(rows)), metadata_(std::move(metadata)) {
    validate();
}

void PolarTable::validate() const {
    if (rows_.size() < 2) {
        throw PolarError("polar table needs at least 2 rows, got " +
                         std::to_string(rows_.size()));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const PolarSample& r = rows_[i];
        if (!std::isfinite(r.alpha_deg) || !std::isfinite(r.cl) || !std::isfinite(r.cd)) {
            throw PolarError("polar row " + std::to_string(i + 1) + " is non-finite");
        }
        if (r.cd <= 0.0) {
            throw PolarError("polar row " + std::to_string(i + 1) +
                             ": cd must be > 0, got " + std::to_string(r.cd));
        }
        if (i > 0 && rows_[i - 1].alpha_deg >= r.alpha_deg) {
            throw PolarError("polar rows must be strictly increasing in alpha_deg "
                             "(rows " + std::to_string(i) + " and " +
                             std::to_string(i + 1) + ")");
        }
    }
}

PolarTable PolarTable::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PolarError("cannot open polar file: " + path);
    return from_csv(in, path);
}

PolarTable PolarTable::from_csv(std::istream& in, const std::string& origin) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) {
        throw PolarError(origin + ": empty polar file");
    }
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "alpha_deg,cl,cd") {
        throw PolarError(origin + ":1: expected header 'alpha_deg,cl,cd', got '" +
                         line + "'");
    }
    std::vector<PolarSample> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        PolarSample s;
        if (cells.size() != 3 || !parse_double(cells[0], s.alpha_deg) ||
            !parse_double(cells[1], s.cl) || !parse_double(cells[2], s.cd)) {
            throw PolarError(origin + ":" + std::to_string(lineno) +
                             ": expected 'alpha_deg,cl,cd' numbers, got '" + line + "'");
        }
        rows.push_back(s);
    }
    try {
        return PolarTable(std::move(rows));
    } catch (const PolarError& e) {
        throw PolarError(origin + ": " + e.what());
    }
}

Coefficients PolarTable::coefficients(double alpha_rad) const {
    double a = rad2deg(alpha_rad);
    // Unit round-trips are not exact; snap edge noise onto the bounds so a
    // query at deg2rad(bound) cannot fall out of range.
    constexpr double kEdgeSlack = 1e-9;
    if (a < rows_.front().alpha_deg && a > rows_.front().alpha_deg - kEdgeSlack) {
        a = rows_.front().alpha_deg;
    } else if (a > rows_.back().alpha_deg && a < rows_.back().alpha_deg + kEdgeSlack) {
        a = rows_.back().alpha_deg;
    }
    return coefficients_deg(a);
}

Coefficients PolarTable::coefficients_deg(double alpha_deg) const {
    const double a = alpha_deg;
    if (a < rows_.front().alpha_deg || a > rows_.back().alpha_deg) {
        std::ostringstream msg;
        msg << "alpha " << a << " deg outside polar range [" << rows_.front().alpha_deg
            << ", " << rows_.back().alpha_deg << "] deg";
        throw std::out_of_range(msg.str());
    }
    auto hi = std::lower_bound(rows_.begin(), rows_.end(), a,
                               [](const PolarSample& s, double v) { return s.alpha_deg < v; });
    if (hi == rows_.end()) return {rows_.back().cl, rows_.back().cd};
    if (hi->alpha_deg == a) return {hi->cl, hi->cd};  // exact sample, bit for bit
    const auto lo = hi - 1;
    const double span = hi->alpha_deg - lo->alpha_deg;
    const double s = (a - lo->alpha_deg) / span;
    return {lo->cl + s * (hi->cl - lo->cl), lo->cd + s * (hi->cd - lo->cd)};
}

bool PolarTable::covers(double lo_deg, double hi_deg) const {
    return rows_.front().alpha_deg <= lo_deg && rows_.back().alpha_deg >= hi_deg;
}

double AnalyticPolar::default_drag_floor(double drag_rise, double optimum_deg) {
    // Invert the closed-form optimum so C_L/C_D peaks at optimum_deg.
    const double s = std::pow(std::sin(deg2rad(optimum_deg)), 2);
    return drag_rise * s / (1.0 - 2.0 * s);
}

Coefficients AnalyticPolar::coefficients(double alpha_rad) const {
    const double sa = std::sin(alpha_rad);
    return {lift_gain * std::sin(2.0 * alpha_rad), drag_floor + drag_rise * sa * sa};
}

double AnalyticPolar::optimum_alpha_rad() const {
    return std::asin(std::sqrt(drag_floor / (drag_rise + 2.0 * drag_floor)));
}

Coefficients coefficients(const CoefficientProvider& provider, double alpha_rad) {
    return std::visit(
        [alpha_rad](const auto& p) { return p.coefficients(alpha_rad); }, provider);
}

Coefficients coefficients_deg(const CoefficientProvider& provider, double alpha_deg) {
    return std::visit(
        [alpha_deg](const auto& p) {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, PolarTable>) {
                return p.coefficients_deg(alpha_deg);
            } else {
                return p.coefficients(deg2rad(alpha_deg));
            }
        },
        provider);
}

LiftDrag aero_forces(const AeroModel& model, double airspeed, double alpha_rad,
                     double airspeed_floor) {
    if (airspeed < 0.0) {
        throw std::invalid_argument("aero_forces: negative airspeed " +
                                    std::to_string(airspeed));
    }
    if (airspeed < airspeed_floor) return {0.0, 0.0};
    const Coefficients c = coefficients(model.provider, alpha_rad);
    const double qbar = model.K() * airspeed * airspeed;
    return {qbar * c.cl, qbar * c.cd};
}

double optimal_aoa_deg(const CoefficientProvider& provider, double lo_deg,
                       double hi_deg, double resolution_deg) {
    if (!(lo_deg < hi_deg) || !(resolution_deg > 0.0)) {
        throw std::invalid_argument("optimal_aoa: degenerate search range [" +
                                    std::to_string(lo_deg) + ", " +
                                    std::to_string(hi_deg) + "] at resolution " +
                                    std::to_string(resolution_deg));
    }
    const auto steps = static_cast<std::size_t>((hi_deg - lo_deg) / resolution_deg);
    const Coefficients first = coefficients_deg(provider, lo_deg);
    double best_alpha = lo_deg;
    double best_ratio = first.cl / first.cd;
    for (std::size_t i = 1; i <= steps; ++i) {
        const double a = std::min(lo_deg + static_cast<double>(i) * resolution_deg, hi_deg);
        const Coefficients c = coefficients_deg(provider, a);
        const double ratio = c.cl / c.cd;
        // Improvements below round-off are ties; ties keep the smallest alpha.
        if (ratio > best_ratio + 1e-12 * std::max(1.0, std::fabs(best_ratio))) {
            best_ratio = ratio;
            best_alpha = a;
        }
    }
    return best_alpha;
}

PolarTable default_polar_table() {
    const AnalyticPolar model{};
    std::vector<PolarSample> rows;
    rows.reserve(201);
    for (int i = 0; i <= 200; ++i) {
        const double a = -10.0 + 0.5 * static_cast<double>(i);
        const Coefficients c = model.coefficients(deg2rad(a));
        rows.push_back({a, c.cl, c.cd});
    }
    return PolarTable(std::move(rows), {.airfoil = "naca0020-like"});
}

}  // namespace tailsim
