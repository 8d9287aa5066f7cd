#pragma once

#include <functional>
#include <vector>

#include "dhwt/bigint.hpp"
#include "dhwt/matrix.hpp"

namespace dhwt {

// Degree cap for the exact-coefficient path; H_n coefficients overflow
// 64-bit integers near n = 30, so everything above the cap is rejected
// rather than silently degraded.
inline constexpr int kMaxHermiteDegree = 64;

// Exact integer coefficients of H_n, ascending powers of x.
struct PolyCoeffs {
    int degree = 0;
    std::vector<BigInt> coeffs;
};

/// Coefficients of the physicists' Hermite polynomial H_n via the
/// three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
PolyCoeffs hermite_coeffs(int n);

/// H_n(x), evaluated by the same recurrence in floating point.
double hermite_eval(int n, double x);

/// H*_m(x) = H_m(x) / (2^m m! sqrt(pi)).
double normalized_hermite(int m, double x);

struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights; // for integrals against exp(-x^2) on R
};

GaussHermiteRule gauss_hermite_rule(int order);

/// Integral over R of exp(-x^2) H_m(x) H_n(x) dx by Gauss-Hermite
/// quadrature. Requires quad_order >= m + n + 1.
double orthogonality_integral(int m, int n, int quad_order);

enum class Weight { unit, shifted_gaussian };

// Basis function h_{n,m} at resolution k: supported on the dyadic cell
// [(n-1)/2^k, n/2^k) with 1 <= n <= 2^k, value 2^{k/2} H*_m(2^{k+1} t - 2n + 1).
struct WaveletBasisSpec {
    int k = 0;          // resolution level
    int n = 1;          // translation, 1-based
    int m = 0;          // polynomial degree
    int truncation = 0; // M; 0 means "not enforced"
};

double wavelet_basis_eval(const WaveletBasisSpec& spec, double t);

// Coefficient matrix C of the truncated basis expansion: entry (n-1, m)
// holds C_{n,m}.
struct CoeffMatrix {
    int k = 0;
    int order = 0; // M
    Weight weight = Weight::unit;
    MatD entries;  // 2^k rows, M cols
};

/// C_{n,m} = integral over the support cell of w_n(t) h_{n,m}(t) f(t) dt,
/// by composite Simpson with cell-aligned panels. quad_panels is the total
/// subinterval count over [0,1): a power of two, at least 2^{k+4}.
CoeffMatrix expansion_coefficients(const std::function<double(double)>& f,
                                   int k, int M, Weight weight, int quad_panels);

/// Sum_n Sum_m C_{n,m} h_{n,m}(t); zero outside [0,1).
double truncated_reconstruct(const CoeffMatrix& c, double t);

} // namespace dhwt
