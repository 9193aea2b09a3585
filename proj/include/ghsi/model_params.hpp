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

#ifndef GHSI_MODEL_PARAMS_HPP
#define GHSI_MODEL_PARAMS_HPP

#include "ghsi/rational.hpp"

namespace ghsi {

/// One Hamiltonian of the family. The derived constants are fixed by (p, q):
/// the regular Painleve IV solution carries (alpha, beta), the factorization
/// constants are gamma = alpha - 1 and d = beta / 2, and eps1, eps2 are the
/// nontrivial roots of the ladder cubic A A^dagger = (H+2)(H-eps1)(H-eps2).
struct ModelParams {
    unsigned p = 0;
    unsigned q = 0;

    ModelParams() = default;
    ModelParams(unsigned p_, unsigned q_) : p(p_), q(q_) {}

    Rational alpha() const { return Rational(2 * p + 2 * q + 1); }
    Rational beta() const { return Rational(-8 * static_cast<long>(q * q)); }
    Rational gamma() const { return Rational(2 * p + 2 * q); }
    Rational d() const { return Rational(-4 * static_cast<long>(q * q)); }
    Rational eps1() const { return Rational(2 * p + 4 * q); }
    Rational eps2() const { return Rational(2 * p); }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

} // namespace ghsi

#endif // GHSI_MODEL_PARAMS_HPP
