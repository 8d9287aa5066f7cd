#pragma once

#include <stdexcept>
#include <string>

#include "dhwt/image.hpp"

namespace dhwt {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a PNG (8-bit gray or RGB; palette images are expanded) or a binary
/// PPM/PGM with maxval 255. The format is detected from the magic bytes.
Image load_image(const std::string& path);

/// Writes by extension: .png, or .ppm/.pgm/.pnm (P6 for color, P5 for gray).
/// Samples are rounded and clamped to 8 bits.
void save_image(const Image& img, const std::string& path);

} // namespace dhwt
