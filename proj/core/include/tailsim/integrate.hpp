#pragma once

#include <array>

namespace tailsim {

/// Classical fixed-step schemes over a small state array. The right-hand
/// side is any callable (double t, const std::array<double, N>&) ->
/// std::array<double, N>.

template <std::size_t N, class Rhs>
std::array<double, N> euler_step(const std::array<double, N>& x, double t, double dt,
                                 Rhs&& rhs) {
    const auto k = rhs(t, x);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = x[i] + dt * k[i];
    return out;
}

template <std::size_t N, class Rhs>
std::array<double, N> rk4_step(const std::array<double, N>& x, double t, double dt,
                               Rhs&& rhs) {
    std::array<double, N> tmp;
    const auto k1 = rhs(t, x);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    const auto k2 = rhs(t + 0.5 * dt, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    const auto k3 = rhs(t + 0.5 * dt, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + dt * k3[i];
    const auto k4 = rhs(t + dt, tmp);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

}  // namespace tailsim
