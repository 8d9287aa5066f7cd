#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dhwt {

// Dense row-major 2D array.
template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> v;

    Mat() = default;
    Mat(int r, int c, T fill = T{}) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {
        if (r < 0 || c < 0) throw std::invalid_argument("Mat: negative dims");
    }

    T& operator()(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    const T& operator()(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }

    std::size_t size() const { return v.size(); }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && v == o.v; }
};

using MatD = Mat<double>;
using MatI = Mat<std::int64_t>;

} // namespace dhwt
