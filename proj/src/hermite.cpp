#include "dhwt/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dhwt {

namespace {

void check_degree(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative degree");
    if (n > kMaxHermiteDegree)
        throw std::out_of_range(std::string(what) + ": degree above cap " +
                                std::to_string(kMaxHermiteDegree));
}

} // namespace

PolyCoeffs hermite_coeffs(int n) {
    check_degree(n, "hermite_coeffs");
    std::vector<BigInt> prev{BigInt(1)};     // H_0 = 1
    if (n == 0) return {0, prev};
    std::vector<BigInt> cur{BigInt(0), BigInt(2)}; // H_1 = 2x
    for (int d = 1; d < n; ++d) {
        std::vector<BigInt> next(static_cast<std::size_t>(d) + 2, BigInt(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i] * 2;
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i] * (2ll * d);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, std::move(cur)};
}

double hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: negative degree");
    if (!std::isfinite(x)) throw std::invalid_argument("hermite_eval: non-finite x");
    if (n == 0) return 1.0;
    double hm1 = 1.0;
    double h = 2.0 * x;
    for (int d = 1; d < n; ++d) {
        double next = 2.0 * x * h - 2.0 * d * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

double normalized_hermite(int m, double x) {
    check_degree(m, "normalized_hermite");
    double denom = std::sqrt(std::numbers::pi);
    for (int i = 1; i <= m; ++i) denom *= 2.0 * i;
    return hermite_eval(m, x) / denom;
}

GaussHermiteRule gauss_hermite_rule(int order) {
    if (order < 1 || order > 256)
        throw std::invalid_argument("gauss_hermite_rule: order out of range");
    GaussHermiteRule rule;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    const int half = (order + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        // initial guesses for the roots, largest first
        if (i == 0) {
            z = std::sqrt(2.0 * order + 1.0) -
                1.85575 * std::pow(2.0 * order + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(order), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[i - 2];
        }
        double pp = 0.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            // orthonormal recurrence w.r.t. exp(-x^2)
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * order) * p2;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) throw std::runtime_error("gauss_hermite_rule: no convergence");
        rule.nodes[i] = z;
        rule.nodes[order - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[order - 1 - i] = rule.weights[i];
    }
    // nodes come out largest-first; flip to ascending
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.weights.begin(), rule.weights.end());
    return rule;
}

double orthogonality_integral(int m, int n, int quad_order) {
    check_degree(m, "orthogonality_integral");
    check_degree(n, "orthogonality_integral");
    if (quad_order < m + n + 1)
        throw std::invalid_argument("orthogonality_integral: quad_order below exactness requirement");
    GaussHermiteRule rule = gauss_hermite_rule(quad_order);
    double sum = 0.0;
    for (int i = 0; i < quad_order; ++i)
        sum += rule.weights[i] * hermite_eval(m, rule.nodes[i]) * hermite_eval(n, rule.nodes[i]);
    return sum;
}

namespace {

void check_basis_spec(const WaveletBasisSpec& s) {
    if (s.k < 0 || s.k > 24) throw std::invalid_argument("wavelet basis: k out of range");
    const long long cells = 1ll << s.k;
    if (s.n < 1 || s.n > cells) throw std::invalid_argument("wavelet basis: n outside [1, 2^k]");
    check_degree(s.m, "wavelet basis");
    if (s.truncation > 0 && s.m >= s.truncation)
        throw std::invalid_argument("wavelet basis: m >= truncation order");
}

// value on the closed cell, without the support indicator
double cell_value(int k, int n, int m, double t) {
    const double u = std::ldexp(t, k + 1) - 2.0 * n + 1.0;
    return std::exp2(0.5 * k) * normalized_hermite(m, u);
}

} // namespace

double wavelet_basis_eval(const WaveletBasisSpec& spec, double t) {
    check_basis_spec(spec);
    if (!std::isfinite(t)) throw std::invalid_argument("wavelet_basis_eval: non-finite t");
    const double lo = std::ldexp(static_cast<double>(spec.n - 1), -spec.k);
    const double hi = std::ldexp(static_cast<double>(spec.n), -spec.k);
    if (t < lo || t >= hi) return 0.0;
    return cell_value(spec.k, spec.n, spec.m, t);
}

CoeffMatrix expansion_coefficients(const std::function<double(double)>& f,
                                   int k, int M, Weight weight, int quad_panels) {
    if (k < 0 || k > 12) throw std::invalid_argument("expansion_coefficients: k out of range");
    if (M < 1 || M > kMaxHermiteDegree)
        throw std::invalid_argument("expansion_coefficients: M out of range");
    if (quad_panels < (1 << (k + 4)) || (quad_panels & (quad_panels - 1)) != 0)
        throw std::invalid_argument("expansion_coefficients: quad_panels must be a power of two >= 2^(k+4)");

    const int cells = 1 << k;
    const int panels = quad_panels >> k; // per cell, even since quad_panels >= 2^(k+4)
    CoeffMatrix out;
    out.k = k;
    out.order = M;
    out.weight = weight;
    out.entries = MatD(cells, M);

    for (int n = 1; n <= cells; ++n) {
        const double a = static_cast<double>(n - 1) / cells;
        const double b = static_cast<double>(n) / cells;
        const double h = (b - a) / panels;
        // sample f and the weight once per node; the last node is nudged
        // inside the half-open cell so f is never read at the boundary
        std::vector<double> fvals(panels + 1), wvals(panels + 1), ts(panels + 1);
        for (int i = 0; i <= panels; ++i) {
            const double t = i == panels ? std::nextafter(b, a) : a + h * i;
            ts[i] = t;
            const double ft = f(t);
            if (!std::isfinite(ft))
                throw std::invalid_argument("expansion_coefficients: non-finite sample");
            fvals[i] = ft;
            if (weight == Weight::unit) {
                wvals[i] = 1.0;
            } else {
                const double u = std::ldexp(t, k + 1) - 2.0 * n + 1.0;
                wvals[i] = std::exp(-u * u);
            }
        }
        for (int m = 0; m < M; ++m) {
            double sum = 0.0;
            for (int i = 0; i <= panels; ++i) {
                const double g = wvals[i] * cell_value(k, n, m, ts[i]) * fvals[i];
                const double coef = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
                sum += coef * g;
            }
            out.entries(n - 1, m) = sum * h / 3.0;
        }
    }
    return out;
}

double truncated_reconstruct(const CoeffMatrix& c, double t) {
    if (c.entries.rows != (1 << c.k) || c.entries.cols != c.order)
        throw std::invalid_argument("truncated_reconstruct: malformed coefficient matrix");
    if (!std::isfinite(t)) throw std::invalid_argument("truncated_reconstruct: non-finite t");
    if (t < 0.0 || t >= 1.0) return 0.0;
    const int cells = 1 << c.k;
    int n = static_cast<int>(t * cells) + 1;
    if (n > cells) n = cells;
    double sum = 0.0;
    for (int m = 0; m < c.order; ++m) {
        if (c.entries(n - 1, m) == 0.0) continue;
        sum += c.entries(n - 1, m) * cell_value(c.k, n, m, t);
    }
    return sum;
}

} // namespace dhwt
