#pragma once

#include <string>
#include <vector>

namespace dhwt {

// Two-channel filter bank. Analysis correlates the signal with the taps at
// even offsets; synthesis scatters each coefficient back through the
// synthesis taps at the same offsets (the adjoint arrangement). For
// orthonormal banks synthesis taps equal analysis taps; the dhwt bank is a
// uniformly scaled orthogonal matrix, so its synthesis taps carry the pi/2
// compensation that makes analysis o synthesis the identity.
struct FilterPair {
    std::string name;
    std::vector<double> analysis_low;
    std::vector<double> analysis_high;
    std::vector<double> synthesis_low;
    std::vector<double> synthesis_high;
};

/// The 2-tap Hermite wavelet bank: rows of (1/sqrt(pi)) [[1, 1], [1, -1]].
FilterPair dhwt_filter();

/// One of haar | db2 | sym2 | coif2. Throws on unknown names.
FilterPair standard_filter(const std::string& name);

/// Registry lookup over {dhwt, haar, db2, sym2, coif2}.
FilterPair filter_by_id(const std::string& id);
const std::vector<std::string>& registered_filter_ids();

/// Round-trip check: analyze/synthesize 100 pseudo-random even-length
/// signals (lengths 2..256) and compare against the input.
bool verify_pr(const FilterPair& filter, double tol);

// Branch filters of the packet construction; for the dhwt case
// u = (1, 1)/sqrt(pi) and y = (1, -1)/sqrt(pi).
struct PacketFilters {
    std::vector<double> u; // scaling branch
    std::vector<double> y; // wavelet branch
};

PacketFilters dhwt_packet_filters();

/// Packet atom value (1/sqrt(pi)) H_m(2^k t - n) on [0,1).
/// Implemented depth k in {0, 1, 2}; m and n in [0, 2^k - 1].
double packet_function_eval(int m, int k, int n, double t);

} // namespace dhwt
