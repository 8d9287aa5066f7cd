#include "dhwt/filter_bank.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dhwt/hermite.hpp"
#include "dhwt/rng.hpp"
#include "dhwt/transform.hpp"

namespace dhwt {

namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

// QMF partner of an orthonormal scaling filter: h[j] = (-1)^j g[L-1-j].
std::vector<double> qmf_high(const std::vector<double>& low) {
    const std::size_t len = low.size();
    std::vector<double> high(len);
    for (std::size_t j = 0; j < len; ++j) {
        high[j] = (j % 2 == 0 ? 1.0 : -1.0) * low[len - 1 - j];
    }
    return high;
}

FilterPair orthonormal_pair(std::string name, std::vector<double> low) {
    FilterPair f;
    f.name = std::move(name);
    f.analysis_low = low;
    f.analysis_high = qmf_high(low);
    f.synthesis_low = f.analysis_low;
    f.synthesis_high = f.analysis_high;
    return f;
}

std::vector<double> db2_low() {
    const double s3 = std::sqrt(3.0);
    const double d = 4.0 * std::numbers::sqrt2;
    return {(1.0 + s3) / d, (3.0 + s3) / d, (3.0 - s3) / d, (1.0 - s3) / d};
}

// tabulated values carry only ~1e-12 of double-shift orthogonality, which
// compounds past the reconstruction budget over deep pyramids; these taps
// are the tabulated ones Newton-projected onto the constraint set
// (orthonormality and the four high-pass moments, all below 2e-15)
std::vector<double> coif2_low() {
    return {-0.00072054944554841773, -0.0018232088707463671, 0.0056114348191954678,
            0.023680171945365862,    -0.059434418648265534,  -0.076488599079400976,
            0.41700518442314999,     0.8127236354496491,     0.38611006682236487,
            -0.06737255472264507,    -0.041464936784348878,  0.016387336464325018};
}

} // namespace

FilterPair dhwt_filter() {
    FilterPair f;
    f.name = "dhwt";
    f.analysis_low = {kInvSqrtPi, kInvSqrtPi};
    f.analysis_high = {kInvSqrtPi, -kInvSqrtPi};
    // F F^T = (2/pi) I, so the inverse is (pi/2) F^T.
    const double half_pi = std::numbers::pi / 2.0;
    f.synthesis_low = {half_pi * kInvSqrtPi, half_pi * kInvSqrtPi};
    f.synthesis_high = {half_pi * kInvSqrtPi, -half_pi * kInvSqrtPi};
    return f;
}

FilterPair standard_filter(const std::string& name) {
    if (name == "haar") {
        const double r = 1.0 / std::numbers::sqrt2;
        return orthonormal_pair("haar", {r, r});
    }
    if (name == "db2") return orthonormal_pair("db2", db2_low());
    // the order-2 symlet coincides with db2
    if (name == "sym2") return orthonormal_pair("sym2", db2_low());
    if (name == "coif2") return orthonormal_pair("coif2", coif2_low());
    throw std::invalid_argument("unknown wavelet: " + name);
}

FilterPair filter_by_id(const std::string& id) {
    if (id == "dhwt") return dhwt_filter();
    return standard_filter(id);
}

const std::vector<std::string>& registered_filter_ids() {
    static const std::vector<std::string> ids = {"dhwt", "haar", "db2", "sym2", "coif2"};
    return ids;
}

bool verify_pr(const FilterPair& filter, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("verify_pr: tol must be positive");
    SplitMix64 rng(0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 100; ++trial) {
        const int len = 2 * (1 + static_cast<int>(rng.next() % 128)); // even, 2..256
        std::vector<double> x(len);
        for (double& v : x) v = rng.uniform(-100.0, 100.0);
        auto [approx, detail] = analyze_1d(x, filter);
        std::vector<double> back = synthesize_1d(approx, detail, filter);
        for (int i = 0; i < len; ++i) {
            if (std::abs(back[i] - x[i]) > tol) return false;
        }
    }
    return true;
}

PacketFilters dhwt_packet_filters() {
    return {{kInvSqrtPi, kInvSqrtPi}, {kInvSqrtPi, -kInvSqrtPi}};
}

double packet_function_eval(int m, int k, int n, double t) {
    if (k < 0 || k > 2) throw std::out_of_range("packet_function_eval: level beyond implemented depth");
    const int bands = 1 << k;
    if (n < 0 || n >= bands) throw std::out_of_range("packet_function_eval: translation out of range");
    if (m < 0 || m >= bands) throw std::out_of_range("packet_function_eval: branch index out of range");
    if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("packet_function_eval: t outside [0,1)");
    return kInvSqrtPi * hermite_eval(m, std::ldexp(t, k) - n);
}

} // namespace dhwt
