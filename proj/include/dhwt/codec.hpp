#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dhwt/defaults.hpp"
#include "dhwt/metrics.hpp"
#include "dhwt/transform.hpp"

namespace dhwt {

// Hard-threshold schedule. Loop i applies T * ratio^(i-1), where T is the
// base threshold (global mode) or the per-level entry (per_level mode).
// Only detail bands are thresholded; the approximation band is never touched.
struct ThresholdSchedule {
    enum class Mode { global, per_level };
    Mode mode = Mode::global;
    double base_threshold = defaults::threshold;
    std::vector<double> per_level; // used in per_level mode, entry l-1 for level l
    double loop_ratio = defaults::loop_ratio;
    int loops = 1;
};

SubbandPyramid threshold_pyramid(const SubbandPyramid& p, const ThresholdSchedule& schedule,
                                 int loop_index);

/// Thresholds actually applied at a loop, one entry per level.
std::vector<double> schedule_thresholds(const ThresholdSchedule& schedule, int levels,
                                        int loop_index);

struct QuantDetail {
    MatI dh, dv, dd;
    bool operator==(const QuantDetail&) const = default;
};

struct QuantChannel {
    MatI ll;
    std::vector<QuantDetail> details;
    bool operator==(const QuantChannel&) const = default;
};

struct QuantizedPyramid {
    std::string wavelet_id;
    int levels = 0;
    int orig_width = 0;
    int orig_height = 0;
    double q = 1.0;
    std::vector<double> thresholds; // as applied, one per level (or one, global)
    std::vector<QuantChannel> channels;
    bool operator==(const QuantizedPyramid&) const = default;
};

/// Uniform scalar quantizer, c -> round(c / q), ties away from zero.
QuantizedPyramid quantize(const SubbandPyramid& p, double q);

/// q * integer.
SubbandPyramid dequantize(const QuantizedPyramid& pq);

struct ContainerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serialized ".dhwt" container. Little-endian layout:
//   magic 'D''H''W''T', u8 version (1), u32 width, u32 height, u8 channels,
//   u8 levels, u8 id length + wavelet id bytes, f64 q, u8 threshold count +
//   f64 thresholds, then per channel: deepest LL first, then levels deepest
//   to finest as d_h, d_v, d_d. Each subband stream is prefixed by its u32
//   coefficient count and stores alternating zero-run varints and zigzag
//   varint nonzero values.
struct CompressedImage {
    std::vector<std::uint8_t> bytes;
};

struct ContainerHeader {
    int version = 0;
    int width = 0;
    int height = 0;
    int channels = 0;
    int levels = 0;
    std::string wavelet_id;
    double q = 0.0;
    std::vector<double> thresholds;
    std::size_t header_bytes = 0;
};

CompressedImage encode(const QuantizedPyramid& pq);
QuantizedPyramid decode(const CompressedImage& ci);
ContainerHeader read_header(const CompressedImage& ci);

void save_container(const CompressedImage& ci, const std::string& path);
CompressedImage load_container(const std::string& path);

/// decompose -> threshold -> quantize -> encode; the report is measured
/// against the decoded result of the container that was just produced.
std::pair<CompressedImage, QualityReport> compress_image(const Image& img,
                                                         const std::string& wavelet_id,
                                                         int levels,
                                                         const ThresholdSchedule& schedule,
                                                         double q, int loop_index = 1);

/// decode -> dequantize -> reconstruct. Samples stay unclamped reals;
/// clamping is for display copies only.
Image decompress_image(const CompressedImage& ci);

/// One independent compress/decompress cycle per loop of the schedule.
std::vector<QualityReport> compression_loop(const Image& img, const std::string& wavelet_id,
                                            int levels, const ThresholdSchedule& schedule,
                                            double q);

} // namespace dhwt
