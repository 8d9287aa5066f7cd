#pragma once

namespace dhwt::defaults {

inline constexpr const char* wavelet = "dhwt";
inline constexpr int levels = 2;

// single-shot compression: symmetric dead zone [-100, 100]
inline constexpr double threshold = 100.0;

// loop driver: geometric threshold schedule T_i = t0 * ratio^(i-1).
// loop_t0 sits just above the largest detail magnitude an 8-bit input can
// produce under the dhwt taps (255 * 8 / pi^2 ~ 206.7), so the first loop
// zeroes everything and each later loop admits a new magnitude band.
inline constexpr double loop_t0 = 384.0;
inline constexpr double loop_ratio = 0.5;
inline constexpr int loops = 11;

inline constexpr double quantizer_step = 1.0;

} // namespace dhwt::defaults
