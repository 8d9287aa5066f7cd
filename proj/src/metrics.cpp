#include "dhwt/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "dhwt/codec.hpp"

namespace dhwt {

double mse(const Image& a, const Image& b) {
    if (a.width != b.width || a.height != b.height || a.channels() != b.channels())
        throw std::invalid_argument("mse: dimension mismatch");
    double sum = 0.0;
    std::size_t count = 0;
    for (int ch = 0; ch < a.channels(); ++ch) {
        const MatD& pa = a.planes[ch];
        const MatD& pb = b.planes[ch];
        for (std::size_t i = 0; i < pa.v.size(); ++i) {
            const double d = pa.v[i] - pb.v[i];
            sum += d * d;
        }
        count += pa.v.size();
    }
    return sum / static_cast<double>(count);
}

double psnr(double mse) {
    if (mse < 0.0) throw std::invalid_argument("psnr: negative mse");
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {

void count_nonzero(const MatI& m, std::size_t& nonzero, std::size_t& total) {
    for (std::int64_t v : m.v) {
        if (v != 0) ++nonzero;
    }
    total += m.v.size();
}

} // namespace

double cr(const QuantizedPyramid& pq) {
    std::size_t nonzero = 0;
    std::size_t total = 0;
    for (const QuantChannel& ch : pq.channels) {
        count_nonzero(ch.ll, nonzero, total);
        for (const QuantDetail& db : ch.details) {
            count_nonzero(db.dh, nonzero, total);
            count_nonzero(db.dv, nonzero, total);
            count_nonzero(db.dd, nonzero, total);
        }
    }
    if (total == 0) return 0.0;
    return 100.0 * static_cast<double>(nonzero) / static_cast<double>(total);
}

double bpp(double cr, int channels) {
    if (cr < 0.0 || cr > 100.0) throw std::invalid_argument("bpp: cr outside [0, 100]");
    if (channels < 1) throw std::invalid_argument("bpp: bad channel count");
    return 8.0 * channels * cr / 100.0;
}

namespace {

void accumulate(const MatD& m, double& energy, std::size_t& zeros, std::size_t& total) {
    for (double v : m.v) {
        energy += v * v;
        if (v == 0.0) ++zeros;
    }
    total += m.v.size();
}

void pyramid_stats(const SubbandPyramid& p, double& energy, std::size_t& zeros,
                   std::size_t& total) {
    energy = 0.0;
    zeros = 0;
    total = 0;
    for (const ChannelPyramid& ch : p.channels) {
        accumulate(ch.ll, energy, zeros, total);
        for (const DetailBands& db : ch.details) {
            accumulate(db.dh, energy, zeros, total);
            accumulate(db.dv, energy, zeros, total);
            accumulate(db.dd, energy, zeros, total);
        }
    }
}

bool same_shape(const SubbandPyramid& a, const SubbandPyramid& b) {
    if (a.levels != b.levels || a.channels.size() != b.channels.size()) return false;
    for (std::size_t ch = 0; ch < a.channels.size(); ++ch) {
        if (!a.channels[ch].ll.same_shape(b.channels[ch].ll)) return false;
        if (a.channels[ch].details.size() != b.channels[ch].details.size()) return false;
        for (std::size_t l = 0; l < a.channels[ch].details.size(); ++l) {
            if (!a.channels[ch].details[l].dh.same_shape(b.channels[ch].details[l].dh) ||
                !a.channels[ch].details[l].dv.same_shape(b.channels[ch].details[l].dv) ||
                !a.channels[ch].details[l].dd.same_shape(b.channels[ch].details[l].dd))
                return false;
        }
    }
    return true;
}

} // namespace

std::pair<double, double> energy_stats(const SubbandPyramid& before,
                                       const SubbandPyramid& after) {
    if (!same_shape(before, after)) throw std::invalid_argument("energy_stats: shape mismatch");
    double e_before = 0.0;
    double e_after = 0.0;
    std::size_t zeros_before = 0, zeros_after = 0, total = 0, total_after = 0;
    pyramid_stats(before, e_before, zeros_before, total);
    pyramid_stats(after, e_after, zeros_after, total_after);
    if (e_before == 0.0) throw std::invalid_argument("energy_stats: zero-energy input");
    const double retained = 100.0 * e_after / e_before;
    const double zero_share = 100.0 * static_cast<double>(zeros_after) /
                              static_cast<double>(total_after);
    return {retained, zero_share};
}

std::vector<CompareRow> comparison_table(const Image& img,
                                         const std::vector<std::string>& wavelet_ids,
                                         int min_level, int max_level,
                                         const ThresholdSchedule& schedule, double q) {
    if (min_level < 1 || max_level > kMaxLevels || min_level > max_level)
        throw std::invalid_argument("comparison_table: bad level range");
    std::vector<CompareRow> rows;
    rows.reserve(wavelet_ids.size() * static_cast<std::size_t>(max_level - min_level + 1));
    for (const std::string& id : wavelet_ids) {
        for (int level = min_level; level <= max_level; ++level) {
            CompareRow row;
            row.wavelet = id;
            row.level = level;
            row.loop = 1;
            row.report = compress_image(img, id, level, schedule, q).second;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string csv_header() {
    return "wavelet,level,loop,mse,psnr,cr_percent,bpp,energy_retained,zero_share";
}

std::string csv_row(const CompareRow& row) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g",
                  row.wavelet.c_str(), row.level, row.loop, row.report.mse, row.report.psnr,
                  row.report.cr, row.report.bpp, row.report.energy_retained,
                  row.report.zero_share);
    return buf;
}

} // namespace dhwt
