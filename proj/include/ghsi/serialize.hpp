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
 * @file serialize.hpp
 * @brief JSON forms of the exact objects.
 *
 * A polynomial is an array of coefficient strings "num/den", lowest power
 * first; the zero polynomial is []. A rational function is
 * {"num": [...], "den": [...]} with a monic denominator. Rationals are
 * "num/den" strings. Keys are emitted in sorted order (nlohmann::json default),
 * which keeps output byte-stable.
 */

#ifndef GHSI_SERIALIZE_HPP
#define GHSI_SERIALIZE_HPP

#include "ghsi/genhermite.hpp"
#include "ghsi/ppoly.hpp"
#include "ghsi/rational_function.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace ghsi {

using json = nlohmann::json;

inline json to_json(const QPoly& p) { return to_fraction_strings(p); }

inline json to_json(const RationalFunction& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline json to_json(const Rational& r) { return to_fraction_string(r); }

inline QPoly poly_from_json(const json& j) { return from_fraction_strings(j.get<std::vector<std::string>>()); }

/// The (p, q) entries of the reference table of H_{p,q}.
inline std::vector<std::pair<unsigned, unsigned>> table1_keys() {
    std::vector<std::pair<unsigned, unsigned>> keys;
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned p = 1; p <= 3; ++p) {
            keys.emplace_back(p, q);
        }
    }
    return keys;
}

struct PTableBlock {
    unsigned p;
    unsigned q;
    unsigned nmax; ///< highest listed level
};

/// j = 1 blocks list n = 1..p and the first vanishing level p+1.
inline std::vector<PTableBlock> table2_blocks() { return {{2, 1, 3}, {2, 2, 3}, {3, 1, 4}}; }

inline std::vector<PTableBlock> table3_blocks() { return {{2, 1, 3}, {2, 2, 3}}; }

inline json table1_json() {
    json rows = json::array();
    for (auto [p, q] : table1_keys()) {
        rows.push_back({{"p", p}, {"q", q}, {"coefficients", to_json(gh(p, q))}});
    }
    return rows;
}

/// Rows {p, q, n, coefficients (primitive form), content}: the ladder-normalized
/// polynomial equals content * coefficients.
inline json ptable_json(int j) {
    json rows = json::array();
    for (const auto& b : j == 1 ? table2_blocks() : table3_blocks()) {
        const ModelParams mp(b.p, b.q);
        for (unsigned n = 1; n <= b.nmax; ++n) {
            const QPoly P = ppoly(mp, j, n);
            rows.push_back({{"p", b.p},
                            {"q", b.q},
                            {"n", n},
                            {"coefficients", to_json(table_form(P))},
                            {"content", to_json(content(P))}});
        }
    }
    return rows;
}

} // namespace ghsi

#endif // GHSI_SERIALIZE_HPP
