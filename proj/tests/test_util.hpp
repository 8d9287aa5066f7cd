#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dhwt/image.hpp"
#include "dhwt/rng.hpp"

namespace testutil {

// dense solve with partial pivoting, for small oracle systems
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) throw std::runtime_error("singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

inline dhwt::Image random_image(int width, int height, int channels, std::uint64_t seed) {
    dhwt::Image img = dhwt::make_image(width, height, channels);
    dhwt::SplitMix64 rng(seed);
    for (dhwt::MatD& p : img.planes)
        for (double& v : p.v) v = rng.uniform(0.0, 255.0);
    return img;
}

inline std::vector<double> random_signal(std::size_t len, std::uint64_t seed,
                                         double lo = -100.0, double hi = 100.0) {
    std::vector<double> x(len);
    dhwt::SplitMix64 rng(seed);
    for (double& v : x) v = rng.uniform(lo, hi);
    return x;
}

inline double max_abs_diff(const dhwt::Image& a, const dhwt::Image& b) {
    double m = 0.0;
    for (int ch = 0; ch < a.channels(); ++ch)
        for (std::size_t i = 0; i < a.planes[ch].v.size(); ++i)
            m = std::max(m, std::abs(a.planes[ch].v[i] - b.planes[ch].v[i]));
    return m;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace testutil
