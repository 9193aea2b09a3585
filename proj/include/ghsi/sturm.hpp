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

#ifndef GHSI_STURM_HPP
#define GHSI_STURM_HPP

#include "ghsi/polynomial.hpp"

#include <vector>

namespace ghsi {

/// Sturm chain p, p', -rem(p, p'), ... with each entry rescaled by a positive
/// constant (primitive part), which leaves sign variations unchanged.
inline std::vector<QPoly> sturm_sequence(const QPoly& a) {
    if (a.is_zero()) {
        throw ZeroPolynomial("sturm_sequence");
    }
    std::vector<QPoly> seq{primitive_part(a)};
    QPoly d = primitive_part(derivative(a));
    if (d.is_zero()) {
        return seq;
    }
    seq.push_back(d);
    for (;;) {
        QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) {
            break;
        }
        seq.push_back(primitive_part(-r));
    }
    return seq;
}

namespace detail {

// Sign variations at +inf (at_minus = false) or -inf: only leading terms matter.
inline int variations_at_infinity(const std::vector<QPoly>& seq, bool at_minus) {
    int count = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sign(p.leading());
        if (at_minus && (*p.degree() % 2 == 1)) {
            s = -s;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

} // namespace detail

/// Number of distinct real roots.
inline unsigned real_zero_count(const QPoly& a) {
    const auto seq = sturm_sequence(a);
    return static_cast<unsigned>(detail::variations_at_infinity(seq, true) -
                                 detail::variations_at_infinity(seq, false));
}

} // namespace ghsi

#endif // GHSI_STURM_HPP
