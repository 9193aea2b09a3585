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
 * @file painleve4.hpp
 * @brief Rational solutions of Painleve IV built from H_{p,q}.
 *
 *     w'' = w'^2/(2w) + (3/2) w^3 + 4x w^2 + 2(x^2 - alpha) w + beta/w
 *
 * Three families (ld = logarithmic derivative):
 *
 *     1:  w = ld(H_{p+1,q} / H_{p,q}),          alpha = 2p+q+1,    beta = -2q^2
 *     2:  w = ld(H_{p,q} / H_{p,q+1}),          alpha = -(p+2q+1), beta = -2p^2
 *     3:  w = -2x + ld(H_{p,q+1} / H_{p+1,q}),  alpha = q-p,       beta = -2(p+q+1)^2
 *
 * The regular member used by the model is family 1 at (p, 2q).
 */

#ifndef GHSI_PAINLEVE4_HPP
#define GHSI_PAINLEVE4_HPP

#include "ghsi/genhermite.hpp"
#include "ghsi/model_params.hpp"
#include "ghsi/rational_function.hpp"

#include <stdexcept>
#include <string>

namespace ghsi {

struct PIVParams {
    Rational alpha;
    Rational beta;
    friend bool operator==(const PIVParams&, const PIVParams&) = default;
};

struct PIVSolution {
    RationalFunction w;
    PIVParams params;
    int family = 1;
    unsigned p = 0;
    unsigned q = 0;
};

namespace detail {

inline void check_family(int family) {
    if (family < 1 || family > 3) {
        throw std::invalid_argument("Painleve IV family must be 1, 2 or 3, got " + std::to_string(family));
    }
}

inline RationalFunction ld_ratio(const QPoly& top, const QPoly& bottom) {
    return logderiv(top) - logderiv(bottom);
}

} // namespace detail

inline PIVParams piv_params(int family, unsigned p, unsigned q) {
    detail::check_family(family);
    const long P = p;
    const long Q = q;
    switch (family) {
    case 1:
        return {Rational(2 * P + Q + 1), Rational(-2 * Q * Q)};
    case 2:
        return {Rational(-(P + 2 * Q + 1)), Rational(-2 * P * P)};
    default:
        return {Rational(Q - P), Rational(-2 * (P + Q + 1) * (P + Q + 1))};
    }
}

/// Log-derivative form.
inline PIVSolution make_w(int family, unsigned p, unsigned q) {
    detail::check_family(family);
    PIVSolution out;
    out.family = family;
    out.p = p;
    out.q = q;
    out.params = piv_params(family, p, q);
    switch (family) {
    case 1:
        out.w = detail::ld_ratio(gh(p + 1, q), gh(p, q));
        break;
    case 2:
        out.w = detail::ld_ratio(gh(p, q), gh(p, q + 1));
        break;
    default:
        out.w = RationalFunction(QPoly::monomial(-2, 1)) + detail::ld_ratio(gh(p, q + 1), gh(p + 1, q));
        break;
    }
    return out;
}

/// Product form; agrees with make_w exactly (no extra constant).
/// Family 1 needs q >= 1, family 2 needs p >= 1.
inline RationalFunction make_w_ratio(int family, unsigned p, unsigned q) {
    detail::check_family(family);
    switch (family) {
    case 1:
        if (q == 0) {
            throw std::invalid_argument("family 1 product form needs q >= 1");
        }
        return {gh(p + 1, q - 1) * gh(p, q + 1) * Rational(2 * q), gh(p, q) * gh(p + 1, q)};
    case 2:
        if (p == 0) {
            throw std::invalid_argument("family 2 product form needs p >= 1");
        }
        return {gh(p + 1, q) * gh(p - 1, q + 1) * Rational(-2 * static_cast<long>(p)), gh(p, q + 1) * gh(p, q)};
    default:
        return {-(gh(p + 1, q + 1) * gh(p, q)), gh(p + 1, q) * gh(p, q + 1)};
    }
}

/// 2 w w'' - w'^2 - 3w^4 - 8x w^3 - 4(x^2 - alpha) w^2 - 2 beta; zero iff w solves PIV.
inline RationalFunction piv_residual(const RationalFunction& w, const PIVParams& params) {
    if (w.is_zero()) {
        throw DivisionByZeroFunction();
    }
    const RationalFunction x = RationalFunction::x();
    const RationalFunction w1 = derivative(w);
    const RationalFunction w2 = derivative(w1);
    const RationalFunction sq = w * w;
    const RationalFunction x2_minus_alpha = x * x - RationalFunction::constant(params.alpha);
    return w * w2 * Rational(2) - w1 * w1 - sq * sq * Rational(3) - x * sq * w * Rational(8) -
           x2_minus_alpha * sq * Rational(4) - RationalFunction::constant(params.beta * 2);
}

/// Left-hand side of a Backlund identity and its differences against the two
/// right-hand-side forms. Both differences vanish identically.
struct BacklundCheck {
    RationalFunction lhs;
    RationalFunction product_diff;
    RationalFunction log_diff;
    bool holds() const { return product_diff.is_zero() && log_diff.is_zero(); }
};

/// The regular solution w = w1_{p,2q}.
inline RationalFunction regular_w(unsigned p, unsigned q) { return make_w(1, p, 2 * q).w; }

/// w' - (2xw + w^2)  vs  -8q H_{p+1,2q+1} H_{p+1,2q-1} / H_{p+1,2q}^2 + 4q  and  2 (ln H_{p+1,2q})'' - 4q.
inline BacklundCheck backlund_minus(unsigned p, unsigned q) {
    if (q == 0) {
        throw std::invalid_argument("backlund_minus needs q >= 1");
    }
    const RationalFunction w = regular_w(p, q);
    const RationalFunction x = RationalFunction::x();
    const Rational fq(4 * q);
    const QPoly h = gh(p + 1, 2 * q);
    BacklundCheck out;
    out.lhs = derivative(w) - (x * w * Rational(2) + w * w);
    const RationalFunction product =
        RationalFunction(gh(p + 1, 2 * q + 1) * gh(p + 1, 2 * q - 1) * Rational(-8 * static_cast<long>(q)), h * h) +
        RationalFunction::constant(fq);
    const RationalFunction log_form = derivative(logderiv(h)) * Rational(2) - RationalFunction::constant(fq);
    out.product_diff = out.lhs - product;
    out.log_diff = out.lhs - log_form;
    return out;
}

/// w' + (2xw + w^2)  vs  8q H_{p,2q+1} H_{p,2q-1} / H_{p,2q}^2 - 4q  and  -2 (ln H_{p,2q})'' + 4q.
inline BacklundCheck backlund_plus(unsigned p, unsigned q) {
    if (q == 0) {
        throw std::invalid_argument("backlund_plus needs q >= 1");
    }
    const RationalFunction w = regular_w(p, q);
    const RationalFunction x = RationalFunction::x();
    const Rational fq(4 * q);
    const QPoly h = gh(p, 2 * q);
    BacklundCheck out;
    out.lhs = derivative(w) + (x * w * Rational(2) + w * w);
    const RationalFunction product =
        RationalFunction(gh(p, 2 * q + 1) * gh(p, 2 * q - 1) * Rational(8 * q), h * h) -
        RationalFunction::constant(fq);
    const RationalFunction log_form = derivative(logderiv(h)) * Rational(-2) + RationalFunction::constant(fq);
    out.product_diff = out.lhs - product;
    out.log_diff = out.lhs - log_form;
    return out;
}

/// B = w^2/4 - w'/2 - w''/(2w) + w'^2/(4w^2) + d/w^2.
inline RationalFunction compute_B(const RationalFunction& w, const Rational& d) {
    if (w.is_zero()) {
        throw DivisionByZeroFunction();
    }
    const RationalFunction w1 = derivative(w);
    const RationalFunction w2 = derivative(w1);
    const RationalFunction inv = w.inverse();
    const RationalFunction inv2 = inv * inv;
    return w * w * make_rational(1, 4) - w1 * make_rational(1, 2) - w2 * inv * make_rational(1, 2) +
           w1 * w1 * inv2 * make_rational(1, 4) + inv2 * d;
}

/// linear * x + rest.
struct Superpotential {
    Rational linear;
    RationalFunction rest;
    RationalFunction as_rf() const { return RationalFunction(QPoly::monomial(linear, 1)) + rest; }
};

struct SuperpotentialSet {
    Superpotential W;
    Superpotential W1;
    Superpotential W2;
};

/// W  = -x + ld(H_{p,2q} / H_{p+1,2q})
/// W1 =  x + ld(H_{p+1,2q-1} / H_{p+1,2q})
/// W2 = -x + ld(H_{p,2q} / H_{p+1,2q-1})
/// For q = 0 every H factor is 1 and the set degenerates to (-x, x, -x).
inline SuperpotentialSet superpotentials(unsigned p, unsigned q) {
    SuperpotentialSet out;
    if (q == 0) {
        out.W = {Rational(-1), {}};
        out.W1 = {Rational(1), {}};
        out.W2 = {Rational(-1), {}};
        return out;
    }
    const QPoly h_p = gh(p, 2 * q);
    const QPoly h_top = gh(p + 1, 2 * q);
    const QPoly h_mid = gh(p + 1, 2 * q - 1);
    out.W = {Rational(-1), detail::ld_ratio(h_p, h_top)};
    out.W1 = {Rational(1), detail::ld_ratio(h_mid, h_top)};
    out.W2 = {Rational(-1), detail::ld_ratio(h_p, h_mid)};
    return out;
}

} // namespace ghsi

#endif // GHSI_PAINLEVE4_HPP
