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


#include "ghsi/genhermite.hpp"
#include "ghsi/sturm.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace ghsi;

TEST(GenHermite, PublishedTable) {
    for (const auto& e : ref::gh_table()) {
        EXPECT_EQ(gh(e.p, e.q), ref::poly(e.terms)) << "(p,q)=(" << e.p << "," << e.q << ")";
    }
}

TEST(GenHermite, BoundaryRowsAreOne) {
    EXPECT_EQ(gh(7, 0), QPoly::constant(1));
    EXPECT_EQ(gh(0, 5), QPoly::constant(1));
    EXPECT_EQ(gh(0, 0), QPoly::constant(1));
}

TEST(GenHermite, FirstRowIsClassicalHermite) {
    for (unsigned p = 0; p <= 10; ++p) {
        EXPECT_EQ(gh(p, 1), testutil::from_coeffs(oracle::hermite(p)));
    }
}

TEST(GenHermite, BothRecurrencesHold) {
    for (unsigned p = 1; p <= 6; ++p) {
        for (unsigned q = 1; q <= 6; ++q) {
            const QPoly h = gh(p, q);
            const QPoly d1 = derivative(h);
            const QPoly hh2 = h * derivative(h, 2);
            EXPECT_EQ(gh(p + 1, q) * gh(p - 1, q) * Rational(2 * p), hh2 - d1 * d1 + h * h * Rational(2 * p));
            EXPECT_EQ(gh(p, q + 1) * gh(p, q - 1) * Rational(2 * q), d1 * d1 - hh2 + h * h * Rational(2 * q));
        }
    }
}

TEST(GenHermite, WronskianExamples) {
    EXPECT_EQ(gh_via_wronskian(1, 1), ref::poly({{2, 1}}));
    EXPECT_EQ(gh_via_wronskian(2, 2), ref::poly({{16, 4}, {12, 0}}));
    EXPECT_EQ(gh_via_wronskian(1, 4), ref::poly({{16, 4}, {48, 2}, {12, 0}}));
    EXPECT_THROW((void)gh_via_wronskian(3, 0), std::invalid_argument);
}

TEST(GenHermite, ProportionalToPermutationWronskian) {
    for (unsigned p = 0; p <= 6; ++p) {
        for (unsigned q = 1; p + q <= 8 && q <= 5; ++q) {
            std::vector<oracle::Coeffs> fs;
            for (unsigned k = 0; k < q; ++k) {
                fs.push_back(oracle::hermite(p + k));
            }
            const QPoly w = testutil::from_coeffs(oracle::wronskian(fs));
            const QPoly h = gh(p, q);
            EXPECT_EQ(w * (h.leading() / w.leading()), h) << "(p,q)=(" << p << "," << q << ")";
            EXPECT_EQ(gh_via_wronskian(p, q), h);
        }
    }
}

TEST(GenHermite, DegreeAndParity) {
    for (unsigned p = 0; p <= 5; ++p) {
        for (unsigned q = 0; q <= 5; ++q) {
            const QPoly h = gh(p, q);
            ASSERT_EQ(*h.degree(), p * q);
            const QPoly expected = (p * q) % 2 ? -h : h;
            EXPECT_EQ(h.reflected(), expected);
        }
    }
}

TEST(GenHermite, ZeroCountLaw) {
    for (unsigned p = 0; p <= 5; ++p) {
        for (unsigned q = 0; q <= 3; ++q) {
            EXPECT_EQ(real_zero_count(gh(p, 2 * q)), 0U);
            EXPECT_EQ(real_zero_count(gh(p, 2 * q + 1)), p);
        }
    }
    EXPECT_EQ(real_zero_count(gh(3, 1)), 3U);
    EXPECT_EQ(real_zero_count(gh(2, 3)), 2U);
}

TEST(GenHermite, ZeroCountLawAgainstCompanionRoots) {
    for (unsigned p = 1; p <= 3; ++p) {
        for (unsigned q = 1; q <= 3; ++q) {
            EXPECT_EQ(oracle::real_root_count_numeric(testutil::to_coeffs(gh(p, q))), q % 2 ? static_cast<int>(p) : 0);
        }
    }
}

TEST(GenHermite, ZerosAreSimple) {
    for (unsigned p = 1; p <= 5; ++p) {
        for (unsigned q = 1; q <= 5; ++q) {
            const QPoly h = gh(p, q);
            EXPECT_EQ(gcd(h, derivative(h)), QPoly::constant(1));
        }
    }
}

TEST(GenHermite, FillOrderIndependent) {
    auto& t = GHTable::global();
    t.clear();
    const QPoly direct = gh(4, 4);
    t.clear();
    for (unsigned q = 0; q <= 4; ++q) {
        for (unsigned p = 0; p <= 4; ++p) {
            (void)gh(p, q);
        }
    }
    EXPECT_EQ(gh(4, 4), direct);
}

TEST(GenHermite, ConcurrentReadersAgree) {
    GHTable::global().clear();
    std::vector<QPoly> results(4);
    std::vector<std::thread> pool;
    for (int i = 0; i < 4; ++i) {
        pool.emplace_back([&, i] { results[i] = gh(3, 4); });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& r : results) {
        EXPECT_EQ(r, ref::poly(ref::gh_table().back().terms));
    }
}
