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
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a field.
 *
 * Coefficients are stored lowest power first with no trailing zeros, so the
 * zero polynomial is the empty sequence and two equal polynomials always have
 * identical storage. The degree of the zero polynomial is std::nullopt.
 *
 * `QPoly` (rational coefficients) is the workhorse of the exact layer; the
 * template is kept generic so the same code can run over other fields in tests.
 */

#ifndef GHSI_POLYNOMIAL_HPP
#define GHSI_POLYNOMIAL_HPP

#include "ghsi/errors.hpp"
#include "ghsi/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ghsi {

template <class T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }

    /// value * x^power
    static Polynomial monomial(const T& value, std::size_t power) {
        std::vector<T> c(power + 1, T(0));
        c[power] = value;
        return Polynomial(std::move(c));
    }

    static Polynomial x() { return monomial(T(1), 1); }

    bool is_zero() const noexcept { return c_.empty(); }

    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) {
            return std::nullopt;
        }
        return c_.size() - 1;
    }

    /// Coefficient of x^k; zero past the degree.
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    const T& leading() const {
        if (c_.empty()) {
            throw ZeroPolynomial("leading coefficient");
        }
        return c_.back();
    }

    std::span<const T> coeffs() const noexcept { return c_; }

    bool is_constant() const noexcept { return c_.size() <= 1; }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), T(0));
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), T(0));
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) {
            v *= s;
        }
        return *this;
    }

    Polynomial& operator/=(const T& s) {
        if (s == 0) {
            throw std::domain_error("polynomial divided by zero scalar");
        }
        for (auto& v : c_) {
            v /= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const T& s) { return a /= s; }

    friend Polynomial operator-(Polynomial a) {
        for (auto& v : a.c_) {
            v = -v;
        }
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Exact Horner evaluation in the coefficient field.
    T operator()(const T& at) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    /// p(-x)
    Polynomial reflected() const {
        Polynomial out = *this;
        for (std::size_t k = 1; k < out.c_.size(); k += 2) {
            out.c_[k] = -out.c_[k];
        }
        return out;
    }

    Polynomial monic() const {
        if (is_zero()) {
            return {};
        }
        return *this / leading();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<T> c_;
};

using QPoly = Polynomial<Rational>;

/// Quotient and remainder with deg(remainder) < deg(divisor).
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) {
        throw ZeroPolynomial("divisor");
    }
    if (a.is_zero() || *a.degree() < *b.degree()) {
        return {Polynomial<T>{}, a};
    }
    std::vector<T> rem(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = *b.degree();
    const std::size_t dq = *a.degree() - db;
    std::vector<T> quo(dq + 1, T(0));
    const T& lead = b.leading();
    for (std::size_t k = dq + 1; k-- > 0;) {
        const T factor = rem[k + db] / lead;
        quo[k] = factor;
        if (factor == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k + j] -= factor * b.coeffs()[j];
        }
    }
    rem.resize(db);
    return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

template <class T>
std::string to_string(const Polynomial<T>& p);

/// Returns q with a = q*b; throws InexactDivision when b does not divide a.
template <class T>
Polynomial<T> divexact(const Polynomial<T>& a, const Polynomial<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw InexactDivision(to_string(r));
    }
    return q;
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& a, unsigned order = 1) {
    std::vector<T> c(a.coeffs().begin(), a.coeffs().end());
    for (unsigned o = 0; o < order && !c.empty(); ++o) {
        for (std::size_t k = 1; k < c.size(); ++k) {
            c[k - 1] = c[k] * T(static_cast<long>(k));
        }
        c.pop_back();
    }
    return Polynomial<T>(std::move(c));
}

/// Plain Euclid; monic result. Used for generic fields.
template <class T>
Polynomial<T> euclid_gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Rational specifics.

/// Positive rational c such that p / c has coprime integer coefficients.
inline Rational content(const QPoly& p) {
    if (p.is_zero()) {
        return Rational{0};
    }
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (c == 0) {
            continue;
        }
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational out{num_gcd, den_lcm};
    out.canonicalize();
    return abs(out);
}

/// p divided by its positive content: integer coefficients, gcd 1, sign kept.
inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) {
        return {};
    }
    return p / content(p);
}

/// Monic gcd. Runs a primitive remainder sequence so intermediate
/// coefficients stay integral and small.
inline QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        throw ZeroPolynomial("gcd of two zero polynomials");
    }
    QPoly u = primitive_part(a);
    QPoly v = primitive_part(b);
    if (u.is_zero()) {
        return v.monic();
    }
    if (v.is_zero()) {
        return u.monic();
    }
    if (*u.degree() < *v.degree()) {
        std::swap(u, v);
    }
    while (!v.is_zero()) {
        // Pseudo-remainder: scale u by lc(v)^(du-dv+1) to stay in Z[x].
        const std::size_t delta = *u.degree() - *v.degree() + 1;
        Rational scale = 1;
        for (std::size_t k = 0; k < delta; ++k) {
            scale *= v.leading();
        }
        QPoly r = primitive_part(divmod(u * scale, v).second);
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

/// Floating evaluation by Horner on the exact coefficients, converted at call time.
inline double eval_double(const QPoly& p, double at) {
    double acc = 0.0;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * at + c[k].get_d();
    }
    return acc;
}

/// Coefficients converted to double once, for hot numerical loops that sample
/// the same polynomial many times.
inline std::vector<double> to_double_coeffs(const QPoly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(c.get_d());
    }
    return out;
}

inline double horner(std::span<const double> c, double at) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * at + c[k];
    }
    return acc;
}

/// Wire format: coefficient strings "num/den", lowest power first.
inline std::vector<std::string> to_fraction_strings(const QPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(to_fraction_string(c));
    }
    return out;
}

inline QPoly from_fraction_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        c.push_back(parse_rational(s));
    }
    return QPoly(std::move(c));
}

/// Human-readable form, highest power first: "16*x^4 + 12".
template <class T>
std::string to_string(const Polynomial<T>& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) {
            continue;
        }
        T mag = c[k];
        const bool negative = mag < 0;
        if (negative) {
            mag = -mag;
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || k == 0) {
            os << mag;
        }
        if (k > 0) {
            if (!unit) {
                os << "*";
            }
            os << "x";
            if (k > 1) {
                os << "^" << k;
            }
        }
    }
    return os.str();
}

/// LaTeX form matching how the tables are typeset: "16 x^{4}+12".
inline std::string to_latex(const QPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) {
            continue;
        }
        Rational mag = abs(c[k]);
        const bool negative = c[k] < 0;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? "-" : "+");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || k == 0) {
            if (mag.get_den() == 1) {
                os << mag.get_num().get_str();
            } else {
                os << "\\frac{" << mag.get_num().get_str() << "}{" << mag.get_den().get_str() << "}";
            }
        }
        if (k > 0) {
            if (!unit) {
                os << " ";
            }
            os << "x";
            if (k > 1) {
                os << "^{" << k << "}";
            }
        }
    }
    return os.str();
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    return os << to_string(p);
}

} // namespace ghsi

#endif // GHSI_POLYNOMIAL_HPP
