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


#include "ghsi/numverify.hpp"
#include "ghsi/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace ghsi;

namespace {

/// mu^2 P_a P_b by the trapezoid oracle.
double trapezoid_inner(const ModelParams& mp, int j1, unsigned n1, int j2, unsigned n2) {
    const QPoly a = ppoly(mp, j1, n1);
    const QPoly b = ppoly(mp, j2, n2);
    const QPoly h = gh(mp.p + 1, 2 * mp.q);
    return oracle::trapezoid(
        [&](double x) {
            const double hv = eval_double(h, x);
            return std::exp(-x * x) * eval_double(a, x) * eval_double(b, x) / (hv * hv);
        },
        14.0, 20000);
}

} // namespace

TEST(Quadrature, GaussianIntegral) {
    QuadratureConfig cfg;
    const auto r = detail::adaptive_gk([](double x) { return std::exp(-x * x); }, 8.0, cfg);
    EXPECT_NEAR(r.value, std::sqrt(std::numbers::pi), 1e-14);
    const auto m = detail::adaptive_gk([](double x) { return x * x * std::exp(-x * x); }, 8.0, cfg);
    EXPECT_NEAR(m.value, std::sqrt(std::numbers::pi) / 2, 1e-14);
}

TEST(Quadrature, ConfigValidation) {
    QuadratureConfig bad;
    bad.relTol = 0.1;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    FDSolverConfig fd;
    fd.gridPoints = 10;
    EXPECT_THROW(fd.validate(), std::invalid_argument);
}

TEST(Quadrature, InnerProductsMatchTrapezoidOracle) {
    for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {1, 2}}) {
        const ModelParams mp(p, q);
        for (unsigned n = 0; n <= 2; ++n) {
            const double gk = inner_product(mp, 2, n, 2, n).value;
            EXPECT_NEAR(gk / trapezoid_inner(mp, 2, n, 2, n), 1.0, 1e-10);
        }
        const double g00 = inner_product(mp, 1, 0, 1, 0).value;
        EXPECT_NEAR(g00 / trapezoid_inner(mp, 1, 0, 1, 0), 1.0, 1e-10);
    }
}

TEST(Quadrature, OrthogonalityExamples) {
    const ModelParams mp(2, 1);
    const double g00 = inner_product(mp, 1, 0, 1, 0).value;
    const double g11 = inner_product(mp, 1, 1, 1, 1).value;
    EXPECT_LT(std::abs(inner_product(mp, 1, 0, 1, 1).value), 1e-10 * std::sqrt(g00 * g11));
    EXPECT_NEAR(g11 / g00, 64.0, 64.0 * 1e-8);
    const double h00 = inner_product(mp, 2, 0, 2, 0).value;
    EXPECT_LT(std::abs(inner_product(mp, 1, 0, 2, 0).value), 1e-10 * std::sqrt(g00 * h00));
}

TEST(Quadrature, GramMatrixDiagonalWithExactRatios) {
    for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
        const ModelParams mp(p, q);
        std::vector<std::pair<int, unsigned>> basis;
        for (unsigned n = 0; n <= std::min(p, 4U); ++n) {
            basis.emplace_back(1, n);
        }
        for (unsigned n = 0; n <= 4; ++n) {
            basis.emplace_back(2, n);
        }
        const auto g = gram_matrix(mp, basis);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            for (std::size_t c = 0; c < basis.size(); ++c) {
                if (r != c) {
                    EXPECT_LT(std::abs(g[r][c]) / std::sqrt(g[r][r] * g[c][c]), 1e-9);
                }
            }
            const std::size_t r0 = basis[r].first == 1 ? 0 : p + 1;
            const double exact = rel_normsq(mp, basis[r].first, basis[r].second).get_d();
            EXPECT_NEAR(g[r][r] / g[r0][r0] / exact, 1.0, 1e-7);
        }
    }
}

TEST(FiniteDifference, SturmBisectionMatchesDenseSolver) {
    for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 1}, {2, 1}}) {
        FDSolverConfig cfg;
        cfg.gridPoints = 500;
        cfg.eigCount = 6;
        const ModelParams mp(p, q);
        const Tridiagonal t = fd_matrix(mp, cfg);
        const auto dense =
            oracle::dense_tridiagonal_eigs(t.d, std::vector<double>(t.d.size() - 1, t.e), cfg.eigCount);
        const auto ours = fd_spectrum(mp, cfg);
        for (int k = 0; k < cfg.eigCount; ++k) {
            EXPECT_NEAR(ours[k], dense[k], 1e-8 * std::max(1.0, std::abs(dense[k])));
        }
    }
}

TEST(FiniteDifference, HarmonicLimit) {
    FDSolverConfig cfg;
    cfg.halfWidth = 10.0;
    cfg.eigCount = 5;
    const auto ev = fd_spectrum(ModelParams(0, 0), cfg);
    for (int k = 0; k < 5; ++k) {
        EXPECT_NEAR(ev[k], 2.0 * k, 2e-3);
    }
}

TEST(FiniteDifference, SpectraAndEmptyGap) {
    const std::vector<std::pair<std::pair<unsigned, unsigned>, std::vector<double>>> cases = {
        {{1, 1}, {0, 2, 8, 10}},
        {{2, 1}, {0, 2, 4, 10, 12}},
        {{1, 2}, {0, 2, 12, 14}},
    };
    for (const auto& [pq, expected] : cases) {
        const ModelParams mp(pq.first, pq.second);
        FDSolverConfig cfg;
        cfg.eigCount = static_cast<int>(expected.size());
        const auto ev = fd_spectrum(mp, cfg);
        for (std::size_t k = 0; k < expected.size(); ++k) {
            EXPECT_NEAR(ev[k], expected[k], 5e-3);
        }
        const double a = 2.0 * pq.first + 0.1;
        const double b = 2.0 * pq.first + 4.0 * pq.second + 2.0 - 0.1;
        EXPECT_EQ(fd_count_in(mp, a, b), 0);
    }
}

TEST(FiniteDifference, DoublingGridBarelyMoves) {
    const ModelParams mp(2, 1);
    FDSolverConfig c1;
    c1.eigCount = 5;
    FDSolverConfig c2 = c1;
    c2.gridPoints = 8000;
    const auto a = fd_spectrum(mp, c1);
    const auto b = fd_spectrum(mp, c2);
    for (int k = 0; k < 5; ++k) {
        EXPECT_LT(std::abs(a[k] - b[k]), 1e-3);
    }
}

TEST(FiniteDifference, EigenfunctionResiduals) {
    FDSolverConfig cfg;
    cfg.gridPoints = 8000;
    EXPECT_LT(eigenfunction_residual(ModelParams(2, 1), 1, 0, cfg), 1e-5);
    EXPECT_GT(eigenfunction_residual(ModelParams(2, 1), 1, 0, cfg, 1.0), 1e-1);
    EXPECT_LT(eigenfunction_residual(ModelParams(2, 2), 2, 1, cfg), 1e-4);
}

TEST(Parallel, MapKeepsOrderAndIsDeterministic) {
    std::vector<int> jobs(50);
    std::iota(jobs.begin(), jobs.end(), 0);
    const auto serial = parallel_map(jobs, [](int v) { return v * v; }, 1);
    const auto par = parallel_map(jobs, [](int v) { return v * v; }, 4);
    EXPECT_EQ(serial, par);
    EXPECT_EQ(par[7], 49);
    EXPECT_THROW(parallel_map(jobs, [](int v) -> int { if (v == 3) { throw std::runtime_error("x"); } return v; }, 3),
                 std::runtime_error);
}

TEST(VerifySuites, WorkedPointPassesEverything) {
    const ModelParams mp(2, 1);
    const auto e = exact_suite(mp);
    const auto n = numeric_suite(mp, 2);
    EXPECT_TRUE(all_pass(e));
    EXPECT_TRUE(all_pass(n));
    for (const auto& c : e) {
        EXPECT_EQ(c.status, CheckStatus::Pass) << c.name;
    }
}

TEST(VerifySuites, HarmonicLimitSkipsSequenceChecks) {
    const auto e = exact_suite(ModelParams(0, 0));
    EXPECT_TRUE(all_pass(e));
    int skipped = 0;
    for (const auto& c : e) {
        skipped += c.status == CheckStatus::Skip ? 1 : 0;
    }
    EXPECT_GT(skipped, 0);
}

TEST(VerifySuites, ParallelMatchesSerial) {
    const ModelParams mp(1, 1);
    const auto a = numeric_suite(mp, 1);
    const auto b = numeric_suite(mp, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
    }
}
