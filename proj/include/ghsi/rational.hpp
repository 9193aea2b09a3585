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

#ifndef GHSI_RATIONAL_HPP
#define GHSI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghsi {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r{Integer{std::to_string(num)}, Integer{std::to_string(den)}};
    r.canonicalize();
    return r;
}

/// "num/den" with den >= 1, the wire format for every coefficient.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Integers print without a denominator, everything else as "num/den".
inline std::string to_display_string(const Rational& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return to_fraction_string(r);
}

/// Accepts "n", "n/d" (any sign on n).
inline Rational parse_rational(std::string_view text) {
    Rational r;
    if (r.set_str(std::string{text}, 10) != 0) {
        throw std::invalid_argument("not a rational: " + std::string{text});
    }
    if (r.get_den() == 0) {
        throw std::domain_error("zero denominator");
    }
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned n) {
    Rational out{1};
    for (unsigned k = 0; k < n; ++k) {
        out *= a + k;
    }
    return out;
}

inline Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace ghsi

#endif // GHSI_RATIONAL_HPP
