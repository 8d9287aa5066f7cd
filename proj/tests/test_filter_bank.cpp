#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dhwt/filter_bank.hpp"
#include "dhwt/hermite.hpp"

using namespace dhwt;

namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double shifted_dot(const std::vector<double>& a, int lag) {
    double s = 0.0;
    for (std::size_t i = 0; i + lag < a.size(); ++i) s += a[i] * a[i + lag];
    return s;
}

} // namespace

TEST_CASE("dhwt filter taps") {
    const FilterPair f = dhwt_filter();
    CHECK(f.analysis_low[0] == doctest::Approx(0.5641895835477563).epsilon(1e-15));
    CHECK(f.analysis_low[1] == doctest::Approx(0.5641895835477563).epsilon(1e-15));
    CHECK(f.analysis_high[0] == doctest::Approx(0.5641895835477563).epsilon(1e-15));
    CHECK(f.analysis_high[1] == doctest::Approx(-0.5641895835477563).epsilon(1e-15));
    // synthesis carries the pi/2 compensation
    for (int j = 0; j < 2; ++j) {
        CHECK(f.synthesis_low[j] ==
              doctest::Approx(std::numbers::pi / 2.0 * f.analysis_low[j]).epsilon(1e-15));
        CHECK(f.synthesis_high[j] ==
              doctest::Approx(std::numbers::pi / 2.0 * f.analysis_high[j]).epsilon(1e-15));
    }
}

TEST_CASE("analysis rows satisfy F F^T = (2/pi) I") {
    const FilterPair f = dhwt_filter();
    const double two_over_pi = 2.0 / std::numbers::pi;
    CHECK(std::abs(dot(f.analysis_low, f.analysis_low) - two_over_pi) <= 1e-14);
    CHECK(std::abs(dot(f.analysis_high, f.analysis_high) - two_over_pi) <= 1e-14);
    CHECK(std::abs(dot(f.analysis_low, f.analysis_high)) <= 1e-14);
}

TEST_CASE("perfect reconstruction for the registered banks") {
    CHECK(verify_pr(dhwt_filter(), 1e-12));
    CHECK(verify_pr(standard_filter("haar"), 1e-12));
    CHECK(verify_pr(standard_filter("db2"), 1e-10));
    for (const std::string& id : registered_filter_ids()) {
        CHECK(verify_pr(filter_by_id(id), 1e-10));
    }
}

TEST_CASE("a perturbed tap breaks reconstruction") {
    FilterPair f = dhwt_filter();
    f.analysis_low[0] += 1e-3;
    CHECK_FALSE(verify_pr(f, 1e-6));
}

TEST_CASE("verify_pr rejects non-positive tolerance") {
    CHECK_THROWS_AS(verify_pr(dhwt_filter(), 0.0), std::invalid_argument);
}

TEST_CASE("haar taps") {
    const FilterPair f = standard_filter("haar");
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(f.analysis_low[0] == doctest::Approx(r).epsilon(1e-15));
    CHECK(f.analysis_low[1] == doctest::Approx(r).epsilon(1e-15));
    CHECK(f.analysis_high[0] == doctest::Approx(r).epsilon(1e-15));
    CHECK(f.analysis_high[1] == doctest::Approx(-r).epsilon(1e-15));
}

TEST_CASE("db2 taps solve the order-2 vanishing-moment equations") {
    const FilterPair f = standard_filter("db2");
    REQUIRE(f.analysis_low.size() == 4);

    // closed-form solution of the defining equations, derived here as the
    // oracle: g = (1+s3, 3+s3, 3-s3, 1-s3) / (4 sqrt 2)
    const double s3 = std::sqrt(3.0);
    const double d = 4.0 * std::numbers::sqrt2;
    const std::vector<double> oracle = {(1 + s3) / d, (3 + s3) / d, (3 - s3) / d, (1 - s3) / d};
    for (int j = 0; j < 4; ++j)
        CHECK(f.analysis_low[j] == doctest::Approx(oracle[j]).epsilon(1e-14));

    double sum = 0.0;
    for (double g : f.analysis_low) sum += g;
    CHECK(std::abs(sum - std::numbers::sqrt2) <= 1e-12);
    CHECK(std::abs(dot(f.analysis_low, f.analysis_low) - 1.0) <= 1e-12);
    CHECK(std::abs(shifted_dot(f.analysis_low, 2)) <= 1e-12);

    // two vanishing moments of the high-pass
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        m0 += f.analysis_high[j];
        m1 += static_cast<double>(j) * f.analysis_high[j];
    }
    CHECK(std::abs(m0) <= 1e-12);
    CHECK(std::abs(m1) <= 1e-12);
}

TEST_CASE("sym2 coincides with db2") {
    const FilterPair a = standard_filter("sym2");
    const FilterPair b = standard_filter("db2");
    CHECK(a.analysis_low == b.analysis_low);
    CHECK(a.analysis_high == b.analysis_high);
}

TEST_CASE("coif2 satisfies the orthonormality and moment conditions") {
    const FilterPair f = standard_filter("coif2");
    REQUIRE(f.analysis_low.size() == 12);
    double sum = 0.0;
    for (double g : f.analysis_low) sum += g;
    CHECK(std::abs(sum - std::numbers::sqrt2) <= 1e-12);
    CHECK(std::abs(dot(f.analysis_low, f.analysis_low) - 1.0) <= 1e-12);
    for (int lag = 2; lag <= 10; lag += 2)
        CHECK(std::abs(shifted_dot(f.analysis_low, lag)) <= 1e-10);

    // four vanishing moments of the high-pass
    for (int s = 0; s <= 3; ++s) {
        double mom = 0.0;
        for (std::size_t j = 0; j < 12; ++j)
            mom += std::pow(static_cast<double>(j), s) * f.analysis_high[j];
        CHECK(std::abs(mom) <= 1e-8);
    }
}

TEST_CASE("unknown wavelet ids are rejected") {
    CHECK_THROWS_AS(standard_filter("db4"), std::invalid_argument);
    CHECK_THROWS_AS(filter_by_id(""), std::invalid_argument);
}

TEST_CASE("packet filters match the analysis taps") {
    const PacketFilters pf = dhwt_packet_filters();
    const FilterPair f = dhwt_filter();
    CHECK(pf.u == f.analysis_low);
    CHECK(pf.y == f.analysis_high);
    CHECK(pf.u[0] == doctest::Approx(kInvSqrtPi).epsilon(1e-15));
    CHECK(pf.u[1] == doctest::Approx(kInvSqrtPi).epsilon(1e-15));
    CHECK(pf.y[0] == doctest::Approx(kInvSqrtPi).epsilon(1e-15));
    CHECK(pf.y[1] == doctest::Approx(-kInvSqrtPi).epsilon(1e-15));
    // the branch recursion scale sqrt(pi) * u cancels to 1
    CHECK(std::sqrt(std::numbers::pi) * pf.u[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::sqrt(std::numbers::pi) * pf.y[1] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("packet atom spot values") {
    for (double t : {0.0, 0.3, 0.77}) {
        CHECK(packet_function_eval(0, 0, 0, t) == doctest::Approx(kInvSqrtPi).epsilon(1e-14));
    }
    // (1/sqrt(pi)) * 2(2t - 1) at t = 0.75 is 1/sqrt(pi)
    CHECK(packet_function_eval(1, 1, 1, 0.75) == doctest::Approx(kInvSqrtPi).epsilon(1e-13));
    // (1/sqrt(pi)) * (4(4t - 2)^2 - 2) at t = 0.5 is -2/sqrt(pi)
    CHECK(packet_function_eval(2, 2, 2, 0.5) ==
          doctest::Approx(-2.0 * kInvSqrtPi).epsilon(1e-13));
}

TEST_CASE("packet atom errors") {
    CHECK_THROWS_AS(packet_function_eval(0, 3, 0, 0.5), std::out_of_range);
    CHECK_THROWS_AS(packet_function_eval(0, 1, 2, 0.5), std::out_of_range);
    CHECK_THROWS_AS(packet_function_eval(2, 1, 0, 0.5), std::out_of_range);
    CHECK_THROWS_AS(packet_function_eval(0, 0, 0, 1.0), std::invalid_argument);
}

TEST_CASE("packet atoms agree with an independent polynomial evaluation") {
    // h_{k,n} at depth <= 2 equals (1/sqrt(pi)) H_n(2^k t - n); check all
    // bands against explicitly written polynomials
    const auto explicit_eval = [](int k, int n, double t) {
        const double u = std::pow(2.0, k) * t - n;
        switch (n) {
            case 0: return kInvSqrtPi;
            case 1: return kInvSqrtPi * (2.0 * u);
            case 2: return kInvSqrtPi * (4.0 * u * u - 2.0);
            case 3: return kInvSqrtPi * (8.0 * u * u * u - 12.0 * u);
        }
        return 0.0;
    };
    for (int k = 0; k <= 2; ++k) {
        for (int n = 0; n < (1 << k); ++n) {
            for (double t : {0.05, 0.3, 0.55, 0.8, 0.95}) {
                CHECK(packet_function_eval(n, k, n, t) ==
                      doctest::Approx(explicit_eval(k, n, t)).epsilon(1e-13));
            }
        }
    }
}
