#pragma once

#include <cstdint>
#include <vector>

#include "dhwt/matrix.hpp"

namespace dhwt {

// Raster image with real-valued samples on the 8-bit intensity scale.
// Samples may leave [0, 255] after lossy processing; clamping happens only
// when a display copy is materialized.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<MatD> planes; // 1 (gray) or 3 (rgb), each height x width
    int bit_depth_origin = 8;

    int channels() const { return static_cast<int>(planes.size()); }
};

Image make_image(int width, int height, int channels);

/// Throws std::invalid_argument unless dims are positive, channel count is
/// 1 or 3, plane shapes agree and every sample is finite.
void validate_image(const Image& img);

/// Nearest 8-bit value, clamped to [0, 255].
std::uint8_t to_8bit(double v);

} // namespace dhwt
