#include "dhwt/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace dhwt {

namespace {

void check_filter(const FilterPair& f) {
    const std::size_t len = f.analysis_low.size();
    if (len < 2 || len % 2 != 0 || f.analysis_high.size() != len ||
        f.synthesis_low.size() != len || f.synthesis_high.size() != len)
        throw std::invalid_argument("filter taps malformed");
}

void analyze_into(std::span<const double> x, const FilterPair& f,
                  double* approx, double* detail) {
    const int n = static_cast<int>(x.size());
    const int taps = static_cast<int>(f.analysis_low.size());
    const int half = n / 2;
    for (int i = 0; i < half; ++i) {
        double a = 0.0;
        double d = 0.0;
        for (int j = 0; j < taps; ++j) {
            int idx = 2 * i + j;
            while (idx >= n) idx -= n;
            const double s = x[idx];
            a += f.analysis_low[j] * s;
            d += f.analysis_high[j] * s;
        }
        approx[i] = a;
        detail[i] = d;
    }
}

void synthesize_into(std::span<const double> approx, std::span<const double> detail,
                     const FilterPair& f, double* out, int n) {
    const int taps = static_cast<int>(f.synthesis_low.size());
    const int half = n / 2;
    for (int i = 0; i < n; ++i) out[i] = 0.0;
    for (int i = 0; i < half; ++i) {
        const double a = approx[i];
        const double d = detail[i];
        for (int j = 0; j < taps; ++j) {
            int idx = 2 * i + j;
            while (idx >= n) idx -= n;
            out[idx] += a * f.synthesis_low[j] + d * f.synthesis_high[j];
        }
    }
}

} // namespace

std::pair<std::vector<double>, std::vector<double>>
analyze_1d(std::span<const double> signal, const FilterPair& filter) {
    check_filter(filter);
    const int n = static_cast<int>(signal.size());
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("analyze_1d: signal length must be even and >= 2");
    std::vector<double> approx(n / 2), detail(n / 2);
    analyze_into(signal, filter, approx.data(), detail.data());
    return {std::move(approx), std::move(detail)};
}

std::vector<double> synthesize_1d(std::span<const double> approx,
                                  std::span<const double> detail,
                                  const FilterPair& filter) {
    check_filter(filter);
    if (approx.size() != detail.size())
        throw std::invalid_argument("synthesize_1d: length mismatch");
    if (approx.empty()) throw std::invalid_argument("synthesize_1d: empty input");
    const int n = static_cast<int>(approx.size()) * 2;
    std::vector<double> out(n);
    synthesize_into(approx, detail, filter, out.data(), n);
    return out;
}

Quad analyze_2d(const MatD& m, const FilterPair& filter) {
    check_filter(filter);
    if (m.rows < 2 || m.cols < 2 || m.rows % 2 != 0 || m.cols % 2 != 0)
        throw std::invalid_argument("analyze_2d: dims must be even and >= 2");
    const int hw = m.cols / 2;
    const int hh = m.rows / 2;

    // row pass: left half approx, right half detail
    MatD rowlo(m.rows, hw), rowhi(m.rows, hw);
    for (int r = 0; r < m.rows; ++r) {
        analyze_into(std::span<const double>(&m.v[static_cast<std::size_t>(r) * m.cols],
                                             static_cast<std::size_t>(m.cols)),
                     filter, &rowlo.v[static_cast<std::size_t>(r) * hw],
                     &rowhi.v[static_cast<std::size_t>(r) * hw]);
    }

    Quad q{MatD(hh, hw), MatD(hh, hw), MatD(hh, hw), MatD(hh, hw)};
    std::vector<double> col(m.rows), a(hh), d(hh);
    for (int c = 0; c < hw; ++c) {
        for (int r = 0; r < m.rows; ++r) col[r] = rowlo(r, c);
        analyze_into(col, filter, a.data(), d.data());
        for (int r = 0; r < hh; ++r) {
            q.ll(r, c) = a[r];
            q.lh(r, c) = d[r];
        }
        for (int r = 0; r < m.rows; ++r) col[r] = rowhi(r, c);
        analyze_into(col, filter, a.data(), d.data());
        for (int r = 0; r < hh; ++r) {
            q.hl(r, c) = a[r];
            q.hh(r, c) = d[r];
        }
    }
    return q;
}

MatD synthesize_2d(const MatD& ll, const MatD& lh, const MatD& hl, const MatD& hh,
                   const FilterPair& filter) {
    check_filter(filter);
    if (!ll.same_shape(lh) || !ll.same_shape(hl) || !ll.same_shape(hh))
        throw std::invalid_argument("synthesize_2d: quadrant dims disagree");
    if (ll.rows < 1 || ll.cols < 1)
        throw std::invalid_argument("synthesize_2d: empty quadrants");
    const int hw = ll.cols;
    const int hh2 = ll.rows;
    const int rows = hh2 * 2;
    const int cols = hw * 2;

    // column pass first (inverse of the analysis order)
    MatD rowlo(rows, hw), rowhi(rows, hw);
    std::vector<double> a(hh2), d(hh2), col(rows);
    for (int c = 0; c < hw; ++c) {
        for (int r = 0; r < hh2; ++r) {
            a[r] = ll(r, c);
            d[r] = lh(r, c);
        }
        synthesize_into(a, d, filter, col.data(), rows);
        for (int r = 0; r < rows; ++r) rowlo(r, c) = col[r];
        for (int r = 0; r < hh2; ++r) {
            a[r] = hl(r, c);
            d[r] = hh(r, c);
        }
        synthesize_into(a, d, filter, col.data(), rows);
        for (int r = 0; r < rows; ++r) rowhi(r, c) = col[r];
    }

    MatD out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        synthesize_into(std::span<const double>(&rowlo.v[static_cast<std::size_t>(r) * hw],
                                                static_cast<std::size_t>(hw)),
                        std::span<const double>(&rowhi.v[static_cast<std::size_t>(r) * hw],
                                                static_cast<std::size_t>(hw)),
                        filter, &out.v[static_cast<std::size_t>(r) * cols], cols);
    }
    return out;
}

std::vector<std::pair<int, int>> level_dims(int width, int height, int levels) {
    std::vector<std::pair<int, int>> dims;
    dims.reserve(levels + 1);
    dims.emplace_back(width, height);
    int w = width;
    int h = height;
    for (int l = 0; l < levels; ++l) {
        w = (w + (w & 1)) / 2;
        h = (h + (h & 1)) / 2;
        dims.emplace_back(w, h);
    }
    return dims;
}

namespace {

MatD pad_to_even(const MatD& m) {
    const int rows = m.rows + (m.rows & 1);
    const int cols = m.cols + (m.cols & 1);
    if (rows == m.rows && cols == m.cols) return m;
    MatD out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const int sr = r < m.rows ? r : m.rows - 1;
        for (int c = 0; c < cols; ++c) {
            const int sc = c < m.cols ? c : m.cols - 1;
            out(r, c) = m(sr, sc);
        }
    }
    return out;
}

MatD crop(const MatD& m, int rows, int cols) {
    if (rows == m.rows && cols == m.cols) return m;
    MatD out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out(r, c) = m(r, c);
    return out;
}

} // namespace

SubbandPyramid decompose(const Image& img, const FilterPair& filter, int levels) {
    validate_image(img);
    if (levels < 1 || levels > kMaxLevels)
        throw std::invalid_argument("decompose: levels must be in [1, 8]");
    SubbandPyramid pyr;
    pyr.wavelet_id = filter.name;
    pyr.levels = levels;
    pyr.orig_width = img.width;
    pyr.orig_height = img.height;
    pyr.channels.resize(img.channels());
    for (int ch = 0; ch < img.channels(); ++ch) {
        MatD cur = img.planes[ch];
        ChannelPyramid& cp = pyr.channels[ch];
        cp.details.reserve(levels);
        for (int l = 0; l < levels; ++l) {
            Quad q = analyze_2d(pad_to_even(cur), filter);
            cp.details.push_back({std::move(q.lh), std::move(q.hl), std::move(q.hh)});
            cur = std::move(q.ll);
        }
        cp.ll = std::move(cur);
    }
    return pyr;
}

Image reconstruct(const SubbandPyramid& pyr, const FilterPair& filter) {
    if (pyr.levels < 1 || pyr.levels > kMaxLevels || pyr.channels.empty())
        throw std::invalid_argument("reconstruct: malformed pyramid");
    const auto dims = level_dims(pyr.orig_width, pyr.orig_height, pyr.levels);
    Image img = make_image(pyr.orig_width, pyr.orig_height,
                           static_cast<int>(pyr.channels.size()));
    for (std::size_t ch = 0; ch < pyr.channels.size(); ++ch) {
        const ChannelPyramid& cp = pyr.channels[ch];
        if (static_cast<int>(cp.details.size()) != pyr.levels)
            throw std::invalid_argument("reconstruct: malformed pyramid");
        MatD cur = cp.ll;
        for (int l = pyr.levels; l >= 1; --l) {
            const auto [w, h] = dims[l];
            const DetailBands& db = cp.details[l - 1];
            if (cur.rows != h || cur.cols != w || !db.dh.same_shape(cur) ||
                !db.dv.same_shape(cur) || !db.dd.same_shape(cur))
                throw std::invalid_argument("reconstruct: malformed pyramid");
            MatD full = synthesize_2d(cur, db.dh, db.dv, db.dd, filter);
            cur = crop(full, dims[l - 1].second, dims[l - 1].first);
        }
        img.planes[ch] = std::move(cur);
    }
    return img;
}

PacketTree packet_decompose(std::span<const double> signal, const FilterPair& filter,
                            int depth) {
    check_filter(filter);
    if (depth < 1 || depth > 20) throw std::invalid_argument("packet_decompose: bad depth");
    const std::size_t n = signal.size();
    if (n == 0 || n % (1ull << depth) != 0)
        throw std::invalid_argument("packet_decompose: length not divisible by 2^depth");
    PacketTree tree;
    tree.depth = depth;
    tree.bands.assign(1, std::vector<double>(signal.begin(), signal.end()));
    for (int l = 0; l < depth; ++l) {
        std::vector<std::vector<double>> next;
        next.reserve(tree.bands.size() * 2);
        for (const auto& band : tree.bands) {
            auto [a, d] = analyze_1d(band, filter);
            next.push_back(std::move(a));
            next.push_back(std::move(d));
        }
        tree.bands = std::move(next);
    }
    return tree;
}

std::vector<double> packet_reconstruct(const PacketTree& tree, const FilterPair& filter) {
    check_filter(filter);
    if (tree.depth < 1 || tree.bands.size() != (1ull << tree.depth))
        throw std::invalid_argument("packet_reconstruct: malformed tree");
    std::vector<std::vector<double>> bands = tree.bands;
    for (int l = 0; l < tree.depth; ++l) {
        std::vector<std::vector<double>> next;
        next.reserve(bands.size() / 2);
        for (std::size_t b = 0; b < bands.size(); b += 2) {
            if (bands[b].size() != bands[b + 1].size())
                throw std::invalid_argument("packet_reconstruct: malformed tree");
            next.push_back(synthesize_1d(bands[b], bands[b + 1], filter));
        }
        bands = std::move(next);
    }
    return bands[0];
}

} // namespace dhwt
