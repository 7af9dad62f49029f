#pragma once

#include <cmath>
#include <numbers>

namespace tailsim {

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Wrap an angle into [-pi, pi].
inline double wrap_pi(double rad) {
    double r = std::remainder(rad, 2.0 * std::numbers::pi);
    return r;
}

}  // namespace tailsim
