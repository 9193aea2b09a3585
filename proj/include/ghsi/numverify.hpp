/*
   Copyright 2026 The ghsi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file numverify.hpp
 * @brief Floating-point cross-checks of the exact layer.
 *
 * - inner_product: adaptive Gauss-Kronrod (7/15) quadrature of
 *   mu^2 P_{n;j} P_{m;k} over [-L, L]; L is widened from the Gaussian decay.
 * - fd_spectrum: lowest eigenvalues of the 3-point finite-difference
 *   discretization of -d^2/dx^2 + V with Dirichlet ends, by Sturm-count
 *   bisection on the symmetric tridiagonal matrix.
 * - eigenfunction_residual: |(-d^2/dx^2 + V - E) phi| / max|phi| on a grid,
 *   5-point stencil, phi = mu P.
 */

#ifndef GHSI_NUMVERIFY_HPP
#define GHSI_NUMVERIFY_HPP

#include "ghsi/model.hpp"
#include "ghsi/ppoly.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ghsi {

struct QuadratureConfig {
    double halfWidth = 0.0; ///< 0 selects L from the decay of the integrand
    double relTol = 1e-13;  ///< relative to the integral of |f|
    int maxDepth = 40;

    void validate() const {
        if (halfWidth < 0.0) {
            throw std::invalid_argument("quadrature halfWidth must be positive (or 0 for automatic)");
        }
        if (!(relTol > 0.0 && relTol <= 1e-6)) {
            throw std::invalid_argument("quadrature relTol must lie in (0, 1e-6]");
        }
        if (maxDepth < 1) {
            throw std::invalid_argument("quadrature maxDepth must be positive");
        }
    }
};

struct FDSolverConfig {
    double halfWidth = 0.0; ///< 0 selects L automatically; a given L is only ever widened
    int gridPoints = 4000;  ///< interior points N
    int eigCount = 5;

    void validate() const {
        if (gridPoints < 500) {
            throw std::invalid_argument("FD gridPoints must be >= 500");
        }
        if (eigCount < 1) {
            throw std::invalid_argument("FD eigCount must be positive");
        }
        if (halfWidth < 0.0) {
            throw std::invalid_argument("FD halfWidth must be positive (or 0 for automatic)");
        }
    }
};

struct QuadResult {
    double value = 0.0;
    double errorEstimate = 0.0;
    double absIntegral = 0.0; ///< integral of |f|, the scale for relative tolerances
    double halfWidth = 0.0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    double abs_value;
    int depth;
    bool operator<(const Segment& o) const { return error < o.error; }
};

inline Segment gk15(const std::function<double(double)>& f, double a, double b, int depth) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double absk = std::abs(fc) * kWgk[7];
    for (int k = 0; k < 7; ++k) {
        const double dx = h * kXgk[k];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kWgk[k] * (f1 + f2);
        absk += kWgk[k] * (std::abs(f1) + std::abs(f2));
        if (k % 2 == 1) {
            gauss += kWg[k / 2] * (f1 + f2);
        }
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h), absk * std::abs(h), depth};
}

/// Globally adaptive: always bisect the segment with the largest error.
inline QuadResult adaptive_gk(const std::function<double(double)>& f, double L, const QuadratureConfig& cfg) {
    std::priority_queue<Segment> heap;
    constexpr int kInitial = 32;
    const double step = 2.0 * L / kInitial;
    for (int i = 0; i < kInitial; ++i) {
        heap.push(gk15(f, -L + i * step, -L + (i + 1) * step, 0));
    }
    constexpr int kMaxSegments = 200000;
    double error = 0.0;
    double absval = 0.0;
    {
        auto copy = heap;
        while (!copy.empty()) {
            error += copy.top().error;
            absval += copy.top().abs_value;
            copy.pop();
        }
    }
    const double eps = std::numeric_limits<double>::epsilon();
    while (error > std::max(cfg.relTol * absval, 50.0 * eps * absval)) {
        Segment worst = heap.top();
        if (worst.depth >= cfg.maxDepth || static_cast<int>(heap.size()) >= kMaxSegments) {
            throw NonConvergence(worst.depth);
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, mid, worst.depth + 1);
        Segment right = gk15(f, mid, worst.b, worst.depth + 1);
        error += left.error + right.error - worst.error;
        absval += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
    }
    // Final sums in a fixed order (by left endpoint) so results are reproducible.
    std::vector<Segment> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    QuadResult out;
    out.halfWidth = L;
    for (const auto& sgm : segs) {
        out.value += sgm.value;
        out.errorEstimate += sgm.error;
        out.absIntegral += sgm.abs_value;
    }
    return out;
}

/// Smallest L >= L0 with x^m exp(-x^2 s) at L below `ratio` times its peak
/// (peak at x = sqrt(m / (2 s))). Works in logarithms.
inline double decay_halfwidth(double m, double s, double ratio, double L0) {
    m = std::max(m, 0.0);
    const double xpk = m > 0.0 ? std::sqrt(m / (2.0 * s)) : 0.0;
    const auto logf = [&](double x) { return (m > 0.0 ? m * std::log(x) : 0.0) - s * x * x; };
    const double peak = m > 0.0 ? logf(xpk) : 0.0;
    double L = std::max(L0, xpk + 1.0);
    while (logf(L) - peak > std::log(ratio)) {
        L += 0.5;
    }
    return L;
}

} // namespace detail

/// integral of mu^2 P_{n1;j1} P_{n2;j2} dx.
inline QuadResult inner_product(const ModelParams& mp, int j1, unsigned n1, int j2, unsigned n2,
                                const QuadratureConfig& cfg = {}) {
    cfg.validate();
    const QPoly a = ppoly(mp, j1, n1);
    const QPoly b = ppoly(mp, j2, n2);
    const QPoly h = gh(mp.p + 1, 2 * mp.q);
    const auto f = [&](double x) {
        const double hv = eval_double(h, x);
        return std::exp(-x * x) * eval_double(a, x) * eval_double(b, x) / (hv * hv);
    };
    const double da = a.degree() ? static_cast<double>(*a.degree()) : 0.0;
    const double db = b.degree() ? static_cast<double>(*b.degree()) : 0.0;
    const double dh = h.degree() ? static_cast<double>(*h.degree()) : 0.0;
    const double L = detail::decay_halfwidth(da + db - 2.0 * dh, 1.0, 1e-20, std::max(cfg.halfWidth, 4.0));
    return detail::adaptive_gk(f, L, cfg);
}

/// Gram matrix over the given (j, n) list.
inline std::vector<std::vector<double>> gram_matrix(const ModelParams& mp,
                                                    const std::vector<std::pair<int, unsigned>>& basis,
                                                    const QuadratureConfig& cfg = {}) {
    const std::size_t k = basis.size();
    std::vector<std::vector<double>> g(k, std::vector<double>(k, 0.0));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = r; c < k; ++c) {
            g[r][c] = inner_product(mp, basis[r].first, basis[r].second, basis[c].first, basis[c].second, cfg).value;
            g[c][r] = g[r][c];
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Finite differences.

/// Symmetric tridiagonal matrix: diag d, constant off-diagonal e.
struct Tridiagonal {
    std::vector<double> d;
    double e = 0.0;
    double L = 0.0;
    double h = 0.0;

    /// Number of eigenvalues strictly below lambda (Sturm count of the LDL^T pivots).
    int count_below(double lambda) const {
        int count = 0;
        double q = 1.0;
        const double e2 = e * e;
        for (std::size_t i = 0; i < d.size(); ++i) {
            q = d[i] - lambda - (i == 0 ? 0.0 : e2 / q);
            if (q == 0.0) {
                q = -std::numeric_limits<double>::epsilon() * (std::abs(d[i]) + std::abs(e));
            }
            if (q < 0.0) {
                ++count;
            }
        }
        return count;
    }

    /// The k-th smallest eigenvalue (0-based), by bisection on the Sturm count.
    double eigenvalue(int k, double lo, double hi) const {
        for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(mid) > k) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return 0.5 * (lo + hi);
    }
};

/// Half-width used by the FD solver: the eigenfunction with energy up to
/// E_max decays like x^m exp(-x^2/2), m = (E_max + 1)/2; widen L until that is
/// below 1e-12 of its peak. E_max bounds the eigCount-th level from above.
inline double fd_halfwidth(const ModelParams& mp, const FDSolverConfig& cfg) {
    const double e_max = 2.0 * (cfg.eigCount - 1) + 2.0 * mp.p + 4.0 * mp.q + 2.0;
    return detail::decay_halfwidth((e_max + 1.0) / 2.0, 0.5, 1e-12, std::max(cfg.halfWidth, 8.0));
}

inline Tridiagonal fd_matrix(const ModelParams& mp, const FDSolverConfig& cfg) {
    cfg.validate();
    const Potential v = potential(mp);
    Tridiagonal t;
    t.L = fd_halfwidth(mp, cfg);
    const int N = cfg.gridPoints;
    t.h = 2.0 * t.L / (N + 1);
    const double ih2 = 1.0 / (t.h * t.h);
    t.d.resize(N);
    for (int i = 0; i < N; ++i) {
        const double x = -t.L + (i + 1) * t.h;
        t.d[i] = 2.0 * ih2 + v(x);
    }
    t.e = -ih2;
    return t;
}

namespace detail {

inline std::pair<double, double> gershgorin(const Tridiagonal& t) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double di : t.d) {
        lo = std::min(lo, di - 2.0 * std::abs(t.e));
        hi = std::max(hi, di + 2.0 * std::abs(t.e));
    }
    return {lo, hi};
}

} // namespace detail

/// The eigCount lowest eigenvalues, ascending.
inline std::vector<double> fd_spectrum(const ModelParams& mp, const FDSolverConfig& cfg = {}) {
    const Tridiagonal t = fd_matrix(mp, cfg);
    const auto [lo, hi] = detail::gershgorin(t);
    std::vector<double> out;
    out.reserve(cfg.eigCount);
    for (int k = 0; k < cfg.eigCount; ++k) {
        out.push_back(t.eigenvalue(k, lo, hi));
    }
    return out;
}

/// Number of FD eigenvalues in the open interval (a, b).
inline int fd_count_in(const ModelParams& mp, double a, double b, const FDSolverConfig& cfg = {}) {
    const Tridiagonal t = fd_matrix(mp, cfg);
    // count_below(b) counts < b; eigenvalues equal to a are measure-zero here.
    return t.count_below(b) - t.count_below(std::nextafter(a, b));
}

/// max_i |(-phi'' + V phi - E phi)(x_i)| / max_i |phi(x_i)| on a uniform grid of
/// N interior points, 5-point stencil. E defaults to the exact eigenvalue.
inline double eigenfunction_residual(const ModelParams& mp, int j, unsigned n, const FDSolverConfig& cfg = {},
                                     std::optional<double> energy = std::nullopt) {
    cfg.validate();
    const QPoly P = ppoly(mp, j, n);
    const QPoly h = gh(mp.p + 1, 2 * mp.q);
    const Potential v = potential(mp);
    const double E = energy ? *energy : static_cast<double>(eigenvalue(mp, j, n));
    const double deg = P.degree() ? static_cast<double>(*P.degree()) - static_cast<double>(*h.degree()) : 0.0;
    const double L = detail::decay_halfwidth(deg, 0.5, 1e-12, std::max(cfg.halfWidth, 8.0));
    const int N = cfg.gridPoints;
    const double step = 2.0 * L / (N + 1);
    std::vector<double> xs(N);
    std::vector<double> phi(N);
    double peak = 0.0;
    for (int i = 0; i < N; ++i) {
        xs[i] = -L + (i + 1) * step;
        phi[i] = std::exp(-0.5 * xs[i] * xs[i]) * eval_double(P, xs[i]) / eval_double(h, xs[i]);
        peak = std::max(peak, std::abs(phi[i]));
    }
    double worst = 0.0;
    const double inv = 1.0 / (12.0 * step * step);
    for (int i = 2; i < N - 2; ++i) {
        const double d2 = (-phi[i - 2] + 16.0 * phi[i - 1] - 30.0 * phi[i] + 16.0 * phi[i + 1] - phi[i + 2]) * inv;
        worst = std::max(worst, std::abs(-d2 + (v(xs[i]) - E) * phi[i]));
    }
    return peak > 0.0 ? worst / peak : worst;
}

/// Run fn over jobs on up to `threads` workers; results keep job order.
template <class Job, class Fn>
auto parallel_map(const std::vector<Job>& jobs, Fn fn, unsigned threads) {
    using R = decltype(fn(jobs.front()));
    std::vector<R> out(jobs.size());
    if (threads <= 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            out[i] = fn(jobs[i]);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < jobs.size(); i = next++) {
                    out[i] = fn(jobs[i]);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

} // namespace ghsi

#endif // GHSI_NUMVERIFY_HPP
