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


#include "ghsi/algebra.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ghsi;

TEST(Surd, ArithmeticIsExact) {
    const Surd r2 = Surd::sqrt(Rational(2));
    EXPECT_EQ(r2 * r2, Surd(Rational(2)));
    EXPECT_EQ(Surd::sqrt(Rational(8)), Surd(Rational(2)) * r2);
    EXPECT_EQ(Surd::sqrt(make_rational(1, 2)) * Surd(Rational(2)), r2);
    EXPECT_TRUE((r2 - r2).is_zero());
    EXPECT_FALSE((r2 + Surd::sqrt(Rational(3))).is_rational());
    EXPECT_NEAR((r2 * Surd::sqrt(Rational(6))).to_double(), std::sqrt(12.0), 1e-14);
    EXPECT_EQ(Surd::sqrt(Rational(0)), Surd());
    EXPECT_THROW((void)Surd::sqrt(Rational(-1)), std::domain_error);
}

TEST(Algebra, DeformationFunctionValues) {
    EXPECT_EQ(f_squared(ModelParams(2, 1), 0), make_rational(1, 32));
    EXPECT_EQ(g_squared(0), make_rational(1, 8));
}

TEST(Algebra, SolveFgConstants) {
    for (unsigned p = 0; p <= 5; ++p) {
        for (unsigned q = 0; q <= 4; ++q) {
            const auto fg = solve_fg(ModelParams(p, q));
            EXPECT_EQ(fg.f.c0, -Rational(static_cast<long>(p)) / 2);
            EXPECT_EQ(fg.f.c1, 0);
            EXPECT_EQ(fg.g.c0, Rational(static_cast<long>(q)) + make_rational(1, 2));
            EXPECT_EQ(fg.g.c1, 0);
        }
    }
}

TEST(Algebra, SolveFgBruteForceAtSmallN) {
    // [f]^2 C^2 at levels n = 0, 1, 2 must equal (n+1)(p-n) and (n+1)(n+1+2q).
    for (unsigned p = 2; p <= 4; ++p) {
        for (unsigned q = 0; q <= 3; ++q) {
            const ModelParams mp(p, q);
            for (long n = 0; n <= 2; ++n) {
                const unsigned up = static_cast<unsigned>(n + 1);
                if (n < static_cast<long>(p)) { // f is only sampled inside the finite sequence
                    EXPECT_EQ(f_squared(mp, n) * ladder_csq(mp, 1, up), Rational((n + 1) * (static_cast<long>(p) - n)));
                }
                EXPECT_EQ(g_squared(n + static_cast<long>(p + 2 * q) + 1) * ladder_csq(mp, 2, up),
                          Rational((n + 1) * (n + 1 + 2 * static_cast<long>(q))));
            }
        }
    }
}

TEST(Algebra, DiagonalEigenvalues) {
    for (unsigned p = 0; p <= 4; ++p) {
        for (unsigned q = 0; q <= 3; ++q) {
            const ModelParams mp(p, q);
            const auto a = matrix_rep(mp, LadderKind::ATilde, p + 1);
            const auto b = matrix_rep(mp, LadderKind::BTilde, 5);
            for (std::size_t n = 0; n <= p; ++n) {
                EXPECT_EQ(a.zero[n][n], Surd(Rational(static_cast<long>(n)) - Rational(static_cast<long>(p)) / 2));
            }
            for (std::size_t n = 0; n < 5; ++n) {
                EXPECT_EQ(b.zero[n][n], Surd(Rational(static_cast<long>(n + q)) + make_rational(1, 2)));
            }
        }
    }
}

TEST(Algebra, MatrixEntries) {
    const auto a = matrix_rep(ModelParams(2, 1), LadderKind::ATilde, 3);
    EXPECT_EQ(a.minus[0][1] * a.minus[0][1], Surd(Rational(2)));
    EXPECT_EQ(a.minus[1][2] * a.minus[1][2], Surd(Rational(2)));
    const auto b = matrix_rep(ModelParams(2, 1), LadderKind::BTilde, 4);
    EXPECT_EQ(b.minus[0][1], Surd::sqrt(Rational(3)));
    EXPECT_EQ(b.minus[1][2], Surd::sqrt(Rational(8)));
    EXPECT_EQ(b.minus[2][3], Surd::sqrt(Rational(15)));
    EXPECT_EQ(b.plus, transpose(b.minus));
    const auto a0 = matrix_rep(ModelParams(0, 2), LadderKind::ATilde, 1);
    EXPECT_TRUE(a0.minus[0][0].is_zero());
    EXPECT_TRUE(a0.zero[0][0].is_zero());
}

TEST(Algebra, DimensionChecks) {
    EXPECT_THROW((void)matrix_rep(ModelParams(2, 1), LadderKind::ATilde, 4), DimensionMismatch);
    EXPECT_THROW((void)matrix_rep(ModelParams(2, 1), LadderKind::BTilde, 1), DimensionMismatch);
}

TEST(Algebra, Su2Exact) {
    for (unsigned p = 0; p <= 4; ++p) {
        for (unsigned q = 0; q <= 3; ++q) {
            const ModelParams mp(p, q);
            const auto r = check_su2(mp);
            EXPECT_TRUE(r.pass) << p << "," << q;
            EXPECT_TRUE(r.residuals.empty());
            EXPECT_EQ(r.casimir, su2_casimir(mp));
        }
    }
}

TEST(Algebra, Su11ExactOnInteriorRows) {
    for (unsigned p = 0; p <= 4; ++p) {
        for (unsigned q = 0; q <= 3; ++q) {
            const ModelParams mp(p, q);
            for (std::size_t dim : {2U, 6U, 10U}) {
                const auto r = check_su11(mp, dim);
                EXPECT_TRUE(r.pass) << p << "," << q << " dim " << dim;
                EXPECT_EQ(r.casimir, su11_casimir(mp));
            }
        }
    }
}

TEST(Algebra, Su11BoundaryRowIsTheOnlyDefect) {
    const auto m = matrix_rep(ModelParams(1, 1), LadderKind::BTilde, 6);
    const SurdMatrix diff = commutator(m.minus, m.plus) - scaled(m.zero, 2);
    for (std::size_t i = 0; i + 1 < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            EXPECT_TRUE(diff[i][j].is_zero());
        }
    }
    EXPECT_FALSE(diff[5][5].is_zero());
}

TEST(Algebra, CommutatorDiagonalAgainstFloatingPoint) {
    // Same commutator assembled from double-precision square roots.
    for (unsigned p = 1; p <= 4; ++p) {
        const int n = static_cast<int>(p) + 1;
        std::vector<std::vector<double>> lo(n, std::vector<double>(n, 0.0));
        for (int k = 1; k < n; ++k) {
            lo[k - 1][k] = std::sqrt(static_cast<double>(k * (static_cast<int>(p) + 1 - k)));
        }
        for (int i = 0; i < n; ++i) {
            double mp_ = 0.0;
            double pm = 0.0;
            for (int k = 0; k < n; ++k) {
                mp_ += lo[i][k] * lo[i][k];
                pm += lo[k][i] * lo[k][i];
            }
            EXPECT_NEAR(mp_ - pm, -2.0 * (i - p / 2.0), 1e-12);
        }
        const auto r = matrix_rep(ModelParams(p, 1), LadderKind::ATilde, p + 1);
        for (int k = 1; k < n; ++k) {
            EXPECT_NEAR(r.minus[k - 1][k].to_double(), lo[k - 1][k], 1e-14);
        }
    }
}

TEST(Algebra, CasimirValues) {
    EXPECT_EQ(su2_casimir(ModelParams(2, 1)), 2);
    EXPECT_EQ(su11_casimir(ModelParams(2, 1)), make_rational(3, 4));
}
