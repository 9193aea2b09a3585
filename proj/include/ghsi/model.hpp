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
 * @file model.hpp
 * @brief One Hamiltonian H = -d^2/dx^2 + V of the family, fixed by (p, q).
 *
 *     V(x) = x^2 + 4q - 1 - 2 (ln H_{p+1,2q})''
 *
 * Spectrum: E_{n;1} = 2n for 0 <= n <= p, E_{n;2} = 2n + 2p + 4q + 2 for n >= 0.
 * Eigenfunctions are mu(x) P_{n;j}(x) with mu = exp(-x^2/2) / H_{p+1,2q}.
 */

#ifndef GHSI_MODEL_HPP
#define GHSI_MODEL_HPP

#include "ghsi/genhermite.hpp"
#include "ghsi/model_params.hpp"
#include "ghsi/rational_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghsi {

struct SpectralPoint {
    int j = 1;
    unsigned n = 0;
    long E = 0;
    Rational csq;      ///< C^2_{n;j}
    Rational relNormSq; ///< N^2_{n;j} / N^2_{0;j}
};

/// V = quadratic + rational, rational = -2 (ln H_{p+1,2q})''.
struct Potential {
    QPoly quadratic;
    RationalFunction rational;

    RationalFunction as_rf() const { return RationalFunction(quadratic) + rational; }
    double operator()(double x) const { return eval_double(quadratic, x) + rational.eval(x); }
};

/// mu = exp(-x^2/2) * rationalPart, rationalPart = 1 / H_{p+1,2q}.
struct WeightFunction {
    RationalFunction rationalPart;
    double operator()(double x) const { return std::exp(-0.5 * x * x) * rationalPart.eval(x); }
};

inline void check_sequence(int j) {
    if (j != 1 && j != 2) {
        throw std::invalid_argument("sequence index j must be 1 or 2, got " + std::to_string(j));
    }
}

inline Potential potential(const ModelParams& mp) {
    Potential v;
    v.quadratic = QPoly{Rational(4 * static_cast<long>(mp.q) - 1), Rational(0), Rational(1)};
    v.rational = derivative(logderiv(gh(mp.p + 1, 2 * mp.q))) * Rational(-2);
    return v;
}

inline WeightFunction weight(const ModelParams& mp) {
    return {RationalFunction(QPoly::constant(1), gh(mp.p + 1, 2 * mp.q))};
}

inline long eigenvalue(const ModelParams& mp, int j, unsigned n) {
    check_sequence(j);
    if (j == 1) {
        return 2 * static_cast<long>(n);
    }
    return 2 * static_cast<long>(n) + 2 * static_cast<long>(mp.p) + 4 * static_cast<long>(mp.q) + 2;
}

/// C^2_{n;j}: 8n(p+2q-n+1)(p-n+1) for j = 1, 8n(n+2q)(n+p+2q+1) for j = 2.
/// Vanishes at n = 0 and, for j = 1, at n = p+1.
inline Rational ladder_csq(const ModelParams& mp, int j, unsigned n) {
    check_sequence(j);
    const long N = n;
    const long P = mp.p;
    const long Q = mp.q;
    if (j == 1) {
        if (n > mp.p + 1) {
            throw OutOfSequence("ladder_csq: j=1 needs n <= p+1");
        }
        return Rational(8 * N * (P + 2 * Q - N + 1) * (P - N + 1));
    }
    return Rational(8 * N * (N + 2 * Q) * (N + P + 2 * Q + 1));
}

/// N^2_{n;j} / N^2_{0;j} = 8^n n! (-p)_n (-p-2q)_n  resp.  8^n n! (2q+1)_n (2q+p+2)_n.
inline Rational rel_normsq(const ModelParams& mp, int j, unsigned n) {
    check_sequence(j);
    const long P = mp.p;
    const long Q = mp.q;
    Rational a;
    Rational b;
    if (j == 1) {
        if (n > mp.p) {
            throw OutOfSequence("rel_normsq: j=1 needs n <= p");
        }
        a = Rational(-P);
        b = Rational(-P - 2 * Q);
    } else {
        a = Rational(2 * Q + 1);
        b = Rational(2 * Q + P + 2);
    }
    Integer eight_n;
    mpz_ui_pow_ui(eight_n.get_mpz_t(), 8, n);
    return Rational(eight_n * factorial(n)) * pochhammer(a, n) * pochhammer(b, n);
}

/// The whole j = 1 ladder (n = 0..p) followed by j = 2 levels n = 0..nmax.
inline std::vector<SpectralPoint> spectrum(const ModelParams& mp, unsigned nmax) {
    std::vector<SpectralPoint> out;
    for (unsigned n = 0; n <= mp.p; ++n) {
        out.push_back({1, n, eigenvalue(mp, 1, n), ladder_csq(mp, 1, n), rel_normsq(mp, 1, n)});
    }
    for (unsigned n = 0; n <= nmax; ++n) {
        out.push_back({2, n, eigenvalue(mp, 2, n), ladder_csq(mp, 2, n), rel_normsq(mp, 2, n)});
    }
    return out;
}

/// (E+2)(E-eps1)(E-eps2); equals C^2_{n+1;j} at E = E_{n;j}.
inline Rational ladder_cubic(const ModelParams& mp, const Rational& E) {
    return (E + 2) * (E - mp.eps1()) * (E - mp.eps2());
}

struct ZeroModePolys {
    QPoly P01; ///< E = 0
    QPoly Pp1; ///< E = 2p, top of the finite ladder
    QPoly P02; ///< E = 2p + 4q + 2, bottom of the infinite ladder
};

inline ZeroModePolys zero_mode_polys(const ModelParams& mp) {
    return {gh(mp.p, 2 * mp.q), gh(mp.p, 2 * mp.q + 1), gh(mp.p + 1, 2 * mp.q + 1)};
}

/// A state exp(sign * x^2/2) * poly / H_{p+1,2q}.
struct ModeState {
    QPoly poly;
    int gaussianSign = -1;
    long E = 0;
    std::string label;
};

/// The kernel members of the ladder operators that are not square integrable:
/// phi_0;2 (A phi = 0) and Phi_0;1, Phi_0;3 (A^dagger Phi = 0). All three carry
/// exp(+x^2/2).
inline std::vector<ModeState> nonnormalizable_modes(const ModelParams& mp) {
    if (mp.q == 0) {
        throw std::invalid_argument("nonnormalizable_modes needs q >= 1");
    }
    const unsigned p = mp.p;
    const unsigned q = mp.q;
    return {
        {gh(p + 2, 2 * q - 1), 1, 2 * static_cast<long>(p) + 2, "phi_0;2"},
        {gh(p + 1, 2 * q - 1), 1, 2 * static_cast<long>(p) + 4 * static_cast<long>(q), "Phi_0;1"},
        {gh(p + 2, 2 * q), 1, -2, "Phi_0;3"},
    };
}

/// d/dx acting on exp(s x^2/2) r, returned as the new rational part.
inline RationalFunction gaussian_derivative(const RationalFunction& r, int s) {
    return derivative(r) + RationalFunction::x() * r * Rational(s);
}

/// (H - E) applied to exp(s x^2/2) poly / H_{p+1,2q}, as a rational part;
/// zero iff the state is an exact formal eigenfunction.
inline RationalFunction hamiltonian_residual(const ModelParams& mp, const QPoly& poly, int s, long E) {
    const RationalFunction r(poly, gh(mp.p + 1, 2 * mp.q));
    const RationalFunction d2 = gaussian_derivative(gaussian_derivative(r, s), s);
    return -d2 + (potential(mp).as_rf() - RationalFunction::constant(Rational(E))) * r;
}

} // namespace ghsi

#endif // GHSI_MODEL_HPP
