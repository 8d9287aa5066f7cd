#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dhwt/filter_bank.hpp"
#include "dhwt/image.hpp"
#include "dhwt/matrix.hpp"

namespace dhwt {

inline constexpr int kMaxLevels = 8;

/// One analysis step with periodic extension at the right edge:
/// approx[i] = sum_j low[j] s[(2i+j) mod n], detail likewise with the high
/// taps. The signal length must be even and >= 2; padding is the caller's
/// job. Output lengths are n/2.
std::pair<std::vector<double>, std::vector<double>>
analyze_1d(std::span<const double> signal, const FilterPair& filter);

/// Exact inverse of analyze_1d for the same filter.
std::vector<double> synthesize_1d(std::span<const double> approx,
                                  std::span<const double> detail,
                                  const FilterPair& filter);

// Quadrants of one separable 2D step. First letter names the row filter,
// second the column filter: lh is the horizontal detail band d_h, hl the
// vertical d_v, hh the diagonal d_d.
struct Quad {
    MatD ll, lh, hl, hh;
};

/// Rows first, then the columns of each half. Both dims must be even.
Quad analyze_2d(const MatD& m, const FilterPair& filter);

MatD synthesize_2d(const MatD& ll, const MatD& lh, const MatD& hl, const MatD& hh,
                   const FilterPair& filter);

struct DetailBands {
    MatD dh, dv, dd;
};

struct ChannelPyramid {
    MatD ll;                          // deepest approximation
    std::vector<DetailBands> details; // details[0] is level 1 (finest)
};

struct SubbandPyramid {
    std::string wavelet_id;
    int levels = 0;
    int orig_width = 0;
    int orig_height = 0;
    std::vector<ChannelPyramid> channels;
};

// Per-level dimension chain with replicate padding to even sizes:
// entry 0 is the original size, entry l the subband size at level l.
std::vector<std::pair<int, int>> level_dims(int width, int height, int levels);

/// Recursive analyze_2d on the approximation band, per channel. Odd
/// intermediate sizes are right/bottom replicate-padded before each step;
/// the original dims are recorded and restored on reconstruct.
SubbandPyramid decompose(const Image& img, const FilterPair& filter, int levels);

/// Inverts decompose and crops back to the original dims.
Image reconstruct(const SubbandPyramid& pyr, const FilterPair& filter);

// Full binary packet tree; band index follows the natural order (band b
// splits into approx 2b and detail 2b+1).
struct PacketTree {
    int depth = 0;
    std::vector<std::vector<double>> bands; // 2^depth bands of equal length
};

PacketTree packet_decompose(std::span<const double> signal, const FilterPair& filter,
                            int depth);
std::vector<double> packet_reconstruct(const PacketTree& tree, const FilterPair& filter);

} // namespace dhwt
