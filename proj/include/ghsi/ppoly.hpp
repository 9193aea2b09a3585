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
 * @file ppoly.hpp
 * @brief The polynomial families P_{n;j} attached to each model.
 *
 * Three-term recurrence, with w1 = w1_{p,2q}, w2 = w2_{p+1,2q-1},
 * w3 = w3_{p,2q-1}, E = E_{n;j}, C^2 = C^2_{n;j}:
 *
 *     R = E - 2(p+1) - w1 w2
 *     P_{n+1} = -( C^2 (R+2)/R P_{n-1}
 *                + [ (R+2) w3 + (E - 2(p+2q)) w2 + E (R+2)/R w1 ] P_n )
 *
 * seeded with P_{-1} = 0, P_{0;1} = H_{p,2q}, P_{0;2} = H_{p+1,2q+1}.
 * Note the sign of the w2 term: (E - 2(p+2q)). The opposite sign does not
 * produce polynomials.
 *
 * This normalization coincides with the ladder one, P_{n+1} = A^dagger(mu P_n)/mu,
 * which raise_oracle() computes independently from first-order operators.
 * Derivative relations satisfied by the sequence (ld = logarithmic derivative):
 *
 *     R P_n'   = (R ld(H_{p,2q}) + E w1) P_n + C^2 P_{n-1}
 *     P_{n+1}  = -(R+2) P_n' + (R ld(H_{p,2q}) + E w1 + 2(E-2p) x) P_n
 */

#ifndef GHSI_PPOLY_HPP
#define GHSI_PPOLY_HPP

#include "ghsi/genhermite.hpp"
#include "ghsi/model.hpp"
#include "ghsi/painleve4.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace ghsi {

/// The three coefficients of the recurrence at level n.
struct RecurrenceCoefficients {
    RationalFunction R;
    RationalFunction c_prev;
    RationalFunction c_same;
};

namespace detail {

inline void check_ppoly_args(const ModelParams& mp, int j) {
    check_sequence(j);
    if (mp.q == 0) {
        throw std::invalid_argument("P_{n;j} needs q >= 1");
    }
}

struct RecurrenceInputs {
    RationalFunction w1;
    RationalFunction w2;
    RationalFunction w3;
};

inline RecurrenceInputs recurrence_inputs(const ModelParams& mp) {
    return {make_w(1, mp.p, 2 * mp.q).w, make_w(2, mp.p + 1, 2 * mp.q - 1).w,
            make_w(3, mp.p, 2 * mp.q - 1).w};
}

inline RecurrenceCoefficients coefficients_from(const ModelParams& mp, const RecurrenceInputs& in, int j,
                                                unsigned n) {
    const Rational E(eigenvalue(mp, j, n));
    const long P = mp.p;
    const long Q = mp.q;
    RecurrenceCoefficients c;
    c.R = RationalFunction::constant(E - Rational(2 * (P + 1))) - in.w1 * in.w2;
    const RationalFunction r_plus_2 = c.R + RationalFunction::constant(Rational(2));
    const RationalFunction ratio = r_plus_2 / c.R;
    c.c_prev = ratio * ladder_csq(mp, j, n);
    c.c_same = r_plus_2 * in.w3 + in.w2 * (E - Rational(2 * (P + 2 * Q))) + ratio * in.w1 * E;
    return c;
}

} // namespace detail

inline RecurrenceCoefficients recurrence_coefficients(const ModelParams& mp, int j, unsigned n) {
    detail::check_ppoly_args(mp, j);
    return detail::coefficients_from(mp, detail::recurrence_inputs(mp), j, n);
}

inline QPoly ppoly_seed(const ModelParams& mp, int j) {
    detail::check_ppoly_args(mp, j);
    return j == 1 ? gh(mp.p, 2 * mp.q) : gh(mp.p + 1, 2 * mp.q + 1);
}

/// Memo cache for P_{n;j}, same publish-after-compute contract as GHTable.
class PPolyTable {
public:
    using Key = std::tuple<unsigned, unsigned, int, unsigned>;

    static PPolyTable& global() {
        static PPolyTable table;
        return table;
    }

    QPoly get(const ModelParams& mp, int j, unsigned n) {
        detail::check_ppoly_args(mp, j);
        if (j == 1 && n > mp.p) {
            return {};
        }
        if (auto hit = lookup({mp.p, mp.q, j, n})) {
            return *hit;
        }
        // Find the highest cached pair (n0-1, n0) below n to resume from.
        unsigned start = 0;
        QPoly prev;
        QPoly cur = ppoly_seed(mp, j);
        for (unsigned k = n; k >= 2; --k) {
            auto a = lookup({mp.p, mp.q, j, k});
            auto b = lookup({mp.p, mp.q, j, k - 1});
            if (a && b) {
                start = k;
                prev = std::move(*b);
                cur = std::move(*a);
                break;
            }
        }
        if (start == 0) {
            publish({mp.p, mp.q, j, 0}, cur);
        }
        const auto inputs = detail::recurrence_inputs(mp);
        for (unsigned k = start; k < n; ++k) {
            const auto c = detail::coefficients_from(mp, inputs, j, k);
            const RationalFunction next = -(c.c_prev * RationalFunction(prev) + c.c_same * RationalFunction(cur));
            QPoly value = next.as_polynomial();
            publish({mp.p, mp.q, j, k + 1}, value);
            prev = std::move(cur);
            cur = std::move(value);
        }
        return cur;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        entries_.clear();
    }

private:
    std::optional<QPoly> lookup(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void publish(const Key& key, const QPoly& value) {
        std::unique_lock lock(mutex_);
        entries_.emplace(key, value);
    }

    mutable std::shared_mutex mutex_;
    std::map<Key, QPoly> entries_;
};

/// P_{n;j}, ladder normalization. Zero for j = 1, n > p.
inline QPoly ppoly(const ModelParams& mp, int j, unsigned n) { return PPolyTable::global().get(mp, j, n); }

/// P divided by its positive integer content: the form the reference tables print.
inline QPoly table_form(const QPoly& P) { return primitive_part(P); }

/// H^2 [P'' - 2(x + H'/H) P' + (H''/H + 2x H'/H + E - 4q) P], H = H_{p+1,2q}.
inline QPoly ode_residual(const ModelParams& mp, const QPoly& P, const Rational& E) {
    const QPoly h = gh(mp.p + 1, 2 * mp.q);
    const QPoly h1 = derivative(h);
    const QPoly h2 = derivative(h1);
    const QPoly x = QPoly::x();
    const QPoly hh = h * h;
    const QPoly p1 = derivative(P);
    return hh * derivative(P, 2) - (x * hh + h * h1) * p1 * Rational(2) +
           (h * h2 + x * h * h1 * Rational(2) + hh * (E - Rational(4 * static_cast<long>(mp.q)))) * P;
}

inline QPoly ode_residual(const ModelParams& mp, int j, unsigned n) {
    return ode_residual(mp, ppoly(mp, j, n), Rational(eigenvalue(mp, j, n)));
}

// ---------------------------------------------------------------------------
// Operator oracle.

/// A^dagger = (D + W)(-D + W2)(-D + W1) applied to exp(s x^2/2) P / H_{p+1,2q};
/// returns the new polynomial part (the result times H_{p+1,2q} exp(-s x^2/2)).
/// Works entirely in rational functions. s = -1 is the finite-norm case.
inline RationalFunction apply_raising(const ModelParams& mp, const QPoly& P, int s = -1) {
    const auto sp = superpotentials(mp.p, mp.q);
    const QPoly h = gh(mp.p + 1, 2 * mp.q);
    RationalFunction r(P, h);
    r = -gaussian_derivative(r, s) + sp.W1.as_rf() * r;
    r = -gaussian_derivative(r, s) + sp.W2.as_rf() * r;
    r = gaussian_derivative(r, s) + sp.W.as_rf() * r;
    return r * RationalFunction(h);
}

/// A = (D + W1)(D + W2)(-D + W), same conventions as apply_raising.
inline RationalFunction apply_lowering(const ModelParams& mp, const QPoly& P, int s = -1) {
    const auto sp = superpotentials(mp.p, mp.q);
    const QPoly h = gh(mp.p + 1, 2 * mp.q);
    RationalFunction r(P, h);
    r = -gaussian_derivative(r, s) + sp.W.as_rf() * r;
    r = gaussian_derivative(r, s) + sp.W2.as_rf() * r;
    r = gaussian_derivative(r, s) + sp.W1.as_rf() * r;
    return r * RationalFunction(h);
}

namespace detail {

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& v) {
    if (v < 0) {
        return std::nullopt;
    }
    const Integer& num = v.get_num();
    const Integer& den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer a;
    Integer b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    Rational out{a, b};
    out.canonicalize();
    return out;
}

} // namespace detail

/// The constant k with A^dagger(mu P_n) = k mu P_{n+1}; k^2 = C^2_{n+1} N^2_n / N^2_{n+1}.
inline Rational raising_constant(const ModelParams& mp, int j, unsigned n) {
    const Rational csq = ladder_csq(mp, j, n + 1);
    if (csq == 0) {
        return Rational(0);
    }
    const Rational k2 = csq * rel_normsq(mp, j, n) / rel_normsq(mp, j, n + 1);
    auto k = detail::rational_sqrt(k2);
    if (!k) {
        throw InconsistentMatch("raising constant squared is not a rational square: " + to_display_string(k2));
    }
    return *k;
}

/// Independent route to P_{n+1;j}: start from the seed and apply the
/// first-order factorization of A^dagger n+1 times, dividing by the raising
/// constant each time. Never touches the recurrence.
inline QPoly raise_oracle(const ModelParams& mp, int j, unsigned n) {
    QPoly cur = ppoly_seed(mp, j);
    for (unsigned k = 0; k <= n; ++k) {
        const QPoly raised = apply_raising(mp, cur).as_polynomial();
        const Rational c = raising_constant(mp, j, k);
        if (c == 0) {
            if (!raised.is_zero()) {
                throw InconsistentMatch("raising past the top of the finite ladder is not zero");
            }
            return {};
        }
        cur = raised / c;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Derivative relations.

struct DerivativeRelationCheck {
    RationalFunction lowering_diff; ///< R P' - (R ld(H_{p,2q}) + E w1) P - C^2 P_{n-1}
    RationalFunction raising_diff;  ///< P_{n+1} + (R+2) P' - (R ld(H_{p,2q}) + E w1 + 2(E-2p)x) P
    bool holds() const { return lowering_diff.is_zero() && raising_diff.is_zero(); }
};

inline DerivativeRelationCheck derivative_relations(const ModelParams& mp, int j, unsigned n) {
    const auto c = recurrence_coefficients(mp, j, n);
    const Rational E(eigenvalue(mp, j, n));
    const RationalFunction w1 = make_w(1, mp.p, 2 * mp.q).w;
    const RationalFunction ldh = logderiv(gh(mp.p, 2 * mp.q));
    const RationalFunction P(ppoly(mp, j, n));
    const RationalFunction dP(derivative(ppoly(mp, j, n)));
    const RationalFunction prev = n == 0 ? RationalFunction{} : RationalFunction(ppoly(mp, j, n - 1));
    const RationalFunction next(ppoly(mp, j, n + 1));
    const RationalFunction core = c.R * ldh + w1 * E;
    const RationalFunction xterm = RationalFunction::x() * ((E - Rational(2 * static_cast<long>(mp.p))) * 2);
    DerivativeRelationCheck out;
    out.lowering_diff = c.R * dP - core * P - prev * ladder_csq(mp, j, n);
    out.raising_diff = next + (c.R + RationalFunction::constant(Rational(2))) * dP - (core + xterm) * P;
    return out;
}

// ---------------------------------------------------------------------------
// Singular points.

struct IndicialReport {
    bool squarefree = true;     ///< H_{p+1,2q} has only simple zeros
    int exponent_low = 0;       ///< Frobenius exponents at each zero of H_{p+1,2q}
    int exponent_high = 3;
    std::vector<bool> levels;   ///< per level: H_{p+1,2q} divides (H'' + 2x H') P - 2 H' P'
    bool pass() const {
        if (!squarefree || exponent_low != 0 || exponent_high != 3) {
            return false;
        }
        for (bool b : levels) {
            if (!b) {
                return false;
            }
        }
        return true;
    }
};

/// At a simple zero x0 of H the ODE reads P'' - (2/(x-x0)) P' + O(1/(x-x0)) P,
/// so the indicial equation is l(l-1) - 2l = l(l-3) = 0. A polynomial solution
/// regular at x0 must then make (H'' + 2x H') P - 2 H' P' vanish there, which is checked
/// as an exact divisibility for every level n <= nmax.
inline IndicialReport indicial_check(const ModelParams& mp, int j, unsigned nmax) {
    IndicialReport out;
    if (mp.q == 0) {
        return out; // no singular points
    }
    const QPoly h = gh(mp.p + 1, 2 * mp.q);
    const QPoly h1 = derivative(h);
    const QPoly h2 = derivative(h1);
    out.squarefree = h.is_constant() || gcd(h, h1).is_constant();
    // Residue of -2H'/H at a simple zero is -2; the coefficient of P has at most
    // a simple pole (denominator H, squarefree), contributing nothing.
    const int a = out.squarefree ? -2 : 0;
    // l^2 + (a-1) l = 0
    out.exponent_low = 0;
    out.exponent_high = 1 - a;
    const unsigned top = j == 1 ? std::min(mp.p, nmax) : nmax;
    for (unsigned n = 0; n <= top; ++n) {
        const QPoly P = ppoly(mp, j, n);
        const QPoly combo = (h2 + QPoly::x() * h1 * Rational(2)) * P - h1 * derivative(P) * Rational(2);
        out.levels.push_back(h.is_constant() || divmod(combo, h).second.is_zero());
    }
    return out;
}

} // namespace ghsi

#endif // GHSI_PPOLY_HPP
