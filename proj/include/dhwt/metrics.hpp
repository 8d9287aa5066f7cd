#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dhwt/transform.hpp"

namespace dhwt {

struct QuantizedPyramid;  // codec.hpp
struct ThresholdSchedule; // codec.hpp

// Quality and rate figures for one compression run. cr is the percentage
// of retained (nonzero) coefficients; byte_cr is the container-bytes ratio,
// reported alongside but never used for table comparisons.
struct QualityReport {
    double mse = 0.0;
    double psnr = 0.0;
    double cr = 0.0;
    double bpp = 0.0;
    double energy_retained = 0.0;
    double zero_share = 0.0;
    std::size_t container_bytes = 0;
    std::size_t raw_bytes = 0;
    double byte_cr = 0.0;
};

/// Mean squared difference over all pixels and channels, unclamped reals.
double mse(const Image& a, const Image& b);

/// 10 log10(255^2 / mse); +infinity for mse == 0.
double psnr(double mse);

/// 100 * nonzero / total over every subband of every channel.
double cr(const QuantizedPyramid& pq);

/// bits per pixel implied by a retained-coefficient percentage:
/// (8 * channels) * cr / 100.
double bpp(double cr, int channels);

/// (energy retained %, zero share %) of `after` relative to `before`.
std::pair<double, double> energy_stats(const SubbandPyramid& before,
                                       const SubbandPyramid& after);

struct CompareRow {
    std::string wavelet;
    int level = 0;
    int loop = 1;
    QualityReport report;
};

/// One compression run per (wavelet, level) pair, same schedule throughout.
std::vector<CompareRow> comparison_table(const Image& img,
                                         const std::vector<std::string>& wavelet_ids,
                                         int min_level, int max_level,
                                         const ThresholdSchedule& schedule, double q);

std::string csv_header();
std::string csv_row(const CompareRow& row);

} // namespace dhwt
