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
 * @file algebra.hpp
 * @brief Deformed ladder operators: su(2) on the finite ladder, su(1,1) on the
 *        infinite one.
 *
 * The ladder operators are rescaled by functions of the Hamiltonian,
 * A_- = f(H) A, B_- = g(H) A, chosen so that the squared ladder constants
 * become quadratic in n:
 *
 *     [f(2n-2)]^2       C^2_{n;1} = -n^2 - (2a0 - 1) n + a1
 *     [g(2n+2p+4q)]^2   C^2_{n;2} =  n^2 + (2b0 - 1) n + b1
 *
 * with [f(2m)]^2 = 1/(8(p+2q-m)) and [g(2m)]^2 = 1/(8(m+1)). Matching gives
 * a0 = -p/2, b0 = q + 1/2, a1 = b1 = 0.
 *
 * Convention: A_0 = N + a0 and B_0 = N + b0 (N the level-number operator), so
 * A_0 has eigenvalue n - p/2 and B_0 has eigenvalue n + q + 1/2. With this
 * choice [A_-, A_+] = -2 A_0 and [B_-, B_+] = 2 B_0 hold exactly.
 */

#ifndef GHSI_ALGEBRA_HPP
#define GHSI_ALGEBRA_HPP

#include "ghsi/model.hpp"
#include "ghsi/rational_function.hpp"
#include "ghsi/surd.hpp"

#include <map>
#include <string>
#include <vector>

namespace ghsi {

enum class LadderKind { ATilde, BTilde };

inline const char* to_string(LadderKind k) { return k == LadderKind::ATilde ? "A-tilde" : "B-tilde"; }

struct DeformedLadder {
    LadderKind kind = LadderKind::ATilde;
    std::map<long, Rational> fsqAt; ///< eigenvalue E -> [f(E)]^2 (or [g(E)]^2)
    Rational c0;                    ///< a0 or b0
    Rational c1;                    ///< a1 or b1
};

/// [f(2m)]^2 = 1/(8(p+2q-m)).
inline Rational f_squared(const ModelParams& mp, long m) {
    const long d = static_cast<long>(mp.p) + 2 * static_cast<long>(mp.q) - m;
    if (d == 0) {
        throw std::domain_error("f(2m) has a pole at m = p+2q");
    }
    return Rational(1) / Rational(8 * d);
}

/// [g(2m)]^2 = 1/(8(m+1)).
inline Rational g_squared(long m) {
    if (m == -1) {
        throw std::domain_error("g(2m) has a pole at m = -1");
    }
    return Rational(1) / Rational(8 * (m + 1));
}

namespace detail {

// Polynomials in n are represented as QPoly in the formal variable.
inline QPoly lin(long a, long b) { return QPoly{Rational(b), Rational(a)}; } // a n + b

/// Coefficients (c0, c1, c2) of a quadratic in n, or InconsistentMatch.
inline std::vector<Rational> quadratic_coeffs(const RationalFunction& lhs, const std::string& which) {
    if (!lhs.is_polynomial()) {
        throw InconsistentMatch(which + ": left-hand side is not polynomial in n: " + to_string(lhs));
    }
    const QPoly& p = lhs.num();
    if (p.degree() && *p.degree() > 2) {
        throw InconsistentMatch(which + ": left-hand side has degree > 2 in n: " + to_string(p));
    }
    return {p.coeff(0), p.coeff(1), p.coeff(2)};
}

} // namespace detail

struct FGSolution {
    DeformedLadder f;
    DeformedLadder g;
    QPoly fLhs; ///< the matched left-hand side, as a polynomial in n
    QPoly gLhs;
};

/// Substitute the f, g ansatz into the finite-difference conditions and match
/// coefficients of n exactly. `nmax` bounds the tabulated g values.
inline FGSolution solve_fg(const ModelParams& mp, unsigned nmax = 8) {
    const long P = mp.p;
    const long Q = mp.q;
    FGSolution out;

    // f side: [f(2n-2)]^2 = 1/(8(p+2q+1-n)); C^2_{n;1} = 8 n (n-p-1)(n-p-2q-1).
    const RationalFunction f_lhs =
        RationalFunction(QPoly::constant(1), detail::lin(-8, 8 * (P + 2 * Q + 1))) *
        RationalFunction(QPoly::monomial(8, 1) * detail::lin(1, -P - 1) * detail::lin(1, -P - 2 * Q - 1));
    const auto fc = detail::quadratic_coeffs(f_lhs, "f");
    // -n^2 - (2a0 - 1) n + a1
    if (fc[2] != -1) {
        throw InconsistentMatch("f: leading coefficient in n is " + to_display_string(fc[2]) + ", expected -1");
    }
    out.f.kind = LadderKind::ATilde;
    out.f.c0 = (Rational(1) - fc[1]) / 2;
    out.f.c1 = fc[0];
    out.fLhs = f_lhs.num();

    // g side: [g(2n+2p+4q)]^2 = 1/(8(n+p+2q+1)); C^2_{n;2} = 8 n (n+2q)(n+p+2q+1).
    const RationalFunction g_lhs =
        RationalFunction(QPoly::constant(1), detail::lin(8, 8 * (P + 2 * Q + 1))) *
        RationalFunction(QPoly::monomial(8, 1) * detail::lin(1, 2 * Q) * detail::lin(1, P + 2 * Q + 1));
    const auto gc = detail::quadratic_coeffs(g_lhs, "g");
    // n^2 + (2b0 - 1) n + b1
    if (gc[2] != 1) {
        throw InconsistentMatch("g: leading coefficient in n is " + to_display_string(gc[2]) + ", expected 1");
    }
    out.g.kind = LadderKind::BTilde;
    out.g.c0 = (gc[1] + 1) / 2;
    out.g.c1 = gc[0];
    out.gLhs = g_lhs.num();

    for (unsigned n = 0; n < mp.p; ++n) {
        out.f.fsqAt.emplace(eigenvalue(mp, 1, n), f_squared(mp, n));
    }
    for (unsigned n = 0; n <= nmax; ++n) {
        out.g.fsqAt.emplace(eigenvalue(mp, 2, n), g_squared(static_cast<long>(n + mp.p + 2 * mp.q + 1)));
    }
    return out;
}

struct SequenceMatrixRep {
    LadderKind kind = LadderKind::ATilde;
    std::size_t dim = 1;
    SurdMatrix minus;
    SurdMatrix plus;
    SurdMatrix zero;
};

/// Matrices on the orthonormal basis {phi_{n;j}}. minus(n-1, n) is the square
/// root of [f]^2 C^2_{n;1} (resp. [g]^2 C^2_{n;2}); these reduce to n(p+1-n)
/// and n(n+2q). The diagonal of zero is n + a0 (resp. n + b0).
inline SequenceMatrixRep matrix_rep(const ModelParams& mp, LadderKind kind, std::size_t dim) {
    if (kind == LadderKind::ATilde && dim != mp.p + 1) {
        throw DimensionMismatch("A-tilde representation has dimension p+1 = " + std::to_string(mp.p + 1));
    }
    if (kind == LadderKind::BTilde && dim < 2) {
        throw DimensionMismatch("B-tilde truncation needs dim >= 2");
    }
    const FGSolution fg = solve_fg(mp, static_cast<unsigned>(dim));
    SequenceMatrixRep rep;
    rep.kind = kind;
    rep.dim = dim;
    rep.minus = zero_matrix(dim);
    rep.zero = zero_matrix(dim);
    const int j = kind == LadderKind::ATilde ? 1 : 2;
    const Rational shift = kind == LadderKind::ATilde ? fg.f.c0 : fg.g.c0;
    for (std::size_t n = 0; n < dim; ++n) {
        rep.zero[n][n] = Surd(Rational(static_cast<long>(n)) + shift);
        if (n == 0) {
            continue;
        }
        const long m = static_cast<long>(n) - 1;
        const Rational scale = kind == LadderKind::ATilde
                                   ? f_squared(mp, m)
                                   : g_squared(m + static_cast<long>(mp.p + 2 * mp.q) + 1);
        rep.minus[n - 1][n] = Surd::sqrt(scale * ladder_csq(mp, j, static_cast<unsigned>(n)));
    }
    rep.plus = transpose(rep.minus);
    return rep;
}

/// One nonzero residual entry of an identity that should vanish.
struct EntryResidual {
    std::string identity;
    std::size_t row = 0;
    std::size_t col = 0;
    std::string value;
};

struct AlgebraReport {
    LadderKind kind = LadderKind::ATilde;
    std::size_t dim = 0;
    bool pass = true;
    std::vector<EntryResidual> residuals;
    Rational casimir;      ///< scalar value of the Casimir (row 0)
    bool casimirScalar = true;
};

namespace detail {

inline void collect(AlgebraReport& rep, const std::string& name, const SurdMatrix& diff, std::size_t skip_rows_from) {
    for (std::size_t i = 0; i < diff.size(); ++i) {
        if (i >= skip_rows_from) {
            continue;
        }
        for (std::size_t j = 0; j < diff.size(); ++j) {
            if (!diff[i][j].is_zero()) {
                rep.pass = false;
                rep.residuals.push_back({name, i, j, diff[i][j].str()});
            }
        }
    }
}

inline void check_casimir(AlgebraReport& rep, const SurdMatrix& cas, std::size_t rows) {
    rep.casimir = cas[0][0].rational_part();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cas.size(); ++j) {
            const Surd expected = i == j ? Surd(rep.casimir) : Surd();
            if (!(cas[i][j] == expected)) {
                rep.casimirScalar = false;
                rep.pass = false;
                rep.residuals.push_back({"casimir", i, j, (cas[i][j] - expected).str()});
            }
        }
    }
}

} // namespace detail

/// [A_-, A_+] = -2 A_0, [A_0, A_+] = A_+, [A_0, A_-] = -A_-, and the Casimir
/// A_+ A_- + A_0^2 - A_0 is scalar, on the full (p+1)-dimensional space.
inline AlgebraReport check_su2(const ModelParams& mp) {
    const auto m = matrix_rep(mp, LadderKind::ATilde, mp.p + 1);
    AlgebraReport rep;
    rep.kind = LadderKind::ATilde;
    rep.dim = m.dim;
    detail::collect(rep, "[minus,plus]+2zero", commutator(m.minus, m.plus) + scaled(m.zero, 2), m.dim);
    detail::collect(rep, "[zero,plus]-plus", commutator(m.zero, m.plus) - m.plus, m.dim);
    detail::collect(rep, "[zero,minus]+minus", commutator(m.zero, m.minus) + m.minus, m.dim);
    detail::check_casimir(rep, m.plus * m.minus + m.zero * m.zero - m.zero, m.dim);
    return rep;
}

/// [B_-, B_+] = 2 B_0 on all rows but the last (truncation boundary),
/// [B_0, B_+] = B_+, [B_0, B_-] = -B_-, and B_0^2 - B_0 - B_+ B_- scalar.
inline AlgebraReport check_su11(const ModelParams& mp, std::size_t dim) {
    const auto m = matrix_rep(mp, LadderKind::BTilde, dim);
    AlgebraReport rep;
    rep.kind = LadderKind::BTilde;
    rep.dim = dim;
    detail::collect(rep, "[minus,plus]-2zero", commutator(m.minus, m.plus) - scaled(m.zero, 2), dim - 1);
    detail::collect(rep, "[zero,plus]-plus", commutator(m.zero, m.plus) - m.plus, dim);
    detail::collect(rep, "[zero,minus]+minus", commutator(m.zero, m.minus) + m.minus, dim);
    detail::check_casimir(rep, m.zero * m.zero - m.zero - m.plus * m.minus, dim - 1);
    return rep;
}

/// Expected Casimir values: (p/2)(p/2+1) and q^2 - 1/4.
inline Rational su2_casimir(const ModelParams& mp) {
    const Rational j = Rational(static_cast<long>(mp.p)) / 2;
    return j * (j + 1);
}

inline Rational su11_casimir(const ModelParams& mp) {
    const Rational q(static_cast<long>(mp.q));
    return q * q - make_rational(1, 4);
}

} // namespace ghsi

#endif // GHSI_ALGEBRA_HPP
