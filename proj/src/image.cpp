#include "dhwt/image.hpp"

#include <cmath>
#include <stdexcept>

namespace dhwt {

Image make_image(int width, int height, int channels) {
    if (width < 1 || height < 1) throw std::invalid_argument("make_image: dims must be positive");
    if (channels != 1 && channels != 3)
        throw std::invalid_argument("make_image: channels must be 1 or 3");
    Image img;
    img.width = width;
    img.height = height;
    img.planes.assign(channels, MatD(height, width));
    return img;
}

void validate_image(const Image& img) {
    if (img.width < 1 || img.height < 1)
        throw std::invalid_argument("image: dims must be positive");
    if (img.channels() != 1 && img.channels() != 3)
        throw std::invalid_argument("image: channels must be 1 or 3");
    for (const MatD& p : img.planes) {
        if (p.rows != img.height || p.cols != img.width)
            throw std::invalid_argument("image: plane shape mismatch");
        for (double v : p.v) {
            if (!std::isfinite(v)) throw std::invalid_argument("image: non-finite sample");
        }
    }
}

std::uint8_t to_8bit(double v) {
    double r = std::round(v);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

} // namespace dhwt
