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

#ifndef GHSI_HERMITE_HPP
#define GHSI_HERMITE_HPP

#include "ghsi/polynomial.hpp"

#include <vector>

namespace ghsi {

/// Physicists' Hermite polynomial H_n.
inline QPoly classical_hermite(unsigned n) {
    QPoly prev = QPoly::constant(1);
    if (n == 0) {
        return prev;
    }
    QPoly cur = QPoly::monomial(2, 1);
    const QPoly two_x = QPoly::monomial(2, 1);
    for (unsigned k = 1; k < n; ++k) {
        QPoly next = two_x * cur - prev * Rational(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// det[ fs[j]^{(i)} ], by Bareiss fraction-free elimination over Q[x].
/// Every division in the elimination is exact by Sylvester's identity.
inline QPoly wronskian(const std::vector<QPoly>& fs) {
    const std::size_t n = fs.size();
    if (n == 0) {
        throw DimensionMismatch("wronskian of an empty list");
    }
    std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n));
    for (std::size_t j = 0; j < n; ++j) {
        QPoly d = fs[j];
        for (std::size_t i = 0; i < n; ++i) {
            m[i][j] = d;
            d = derivative(d);
        }
    }
    int sign = 1;
    QPoly prev_pivot = QPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k].is_zero()) {
                ++swap;
            }
            if (swap == n) {
                return {};
            }
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev_pivot);
            }
            m[i][k] = QPoly{};
        }
        prev_pivot = m[k][k];
    }
    QPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

} // namespace ghsi

#endif // GHSI_HERMITE_HPP
