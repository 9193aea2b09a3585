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

#ifndef GHSI_SURD_HPP
#define GHSI_SURD_HPP

#include "ghsi/rational.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghsi {

/// Finite sum  sum_k c_k sqrt(r_k)  with rational c_k and distinct squarefree
/// positive integers r_k. Closed under +, -, *; zero test is exact because
/// square roots of distinct squarefree integers are linearly independent over Q.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& c) { // NOLINT
        if (c != 0) {
            terms_.emplace(Integer(1), c);
        }
    }
    Surd(long c) : Surd(Rational(c)) {} // NOLINT

    /// sqrt(v) for a nonnegative rational v.
    static Surd sqrt(const Rational& v) {
        if (v < 0) {
            throw std::domain_error("square root of a negative rational");
        }
        if (v == 0) {
            return {};
        }
        // sqrt(a/b) = sqrt(a b) / b
        Integer ab = v.get_num() * v.get_den();
        auto [outside, radicand] = split_square(ab);
        Surd s;
        Rational c{outside, v.get_den()};
        c.canonicalize();
        s.terms_.emplace(radicand, c);
        return s;
    }

    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_rational() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    Rational rational_part() const {
        auto it = terms_.find(Integer(1));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    double to_double() const {
        double acc = 0.0;
        for (const auto& [r, c] : terms_) {
            acc += c.get_d() * std::sqrt(r.get_d());
        }
        return acc;
    }

    friend Surd operator+(Surd a, const Surd& b) {
        for (const auto& [r, c] : b.terms_) {
            a.add_term(r, c);
        }
        return a;
    }

    friend Surd operator-(const Surd& a) {
        Surd out = a;
        for (auto& [r, c] : out.terms_) {
            c = -c;
        }
        return out;
    }

    friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

    friend Surd operator*(const Surd& a, const Surd& b) {
        Surd out;
        for (const auto& [r1, c1] : a.terms_) {
            for (const auto& [r2, c2] : b.terms_) {
                // sqrt(r1) sqrt(r2) = g sqrt(r1 r2 / g^2), g = gcd(r1, r2)
                Integer g;
                mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), r2.get_mpz_t());
                Integer rad = (r1 / g) * (r2 / g);
                out.add_term(rad, c1 * c2 * Rational(g));
            }
        }
        return out;
    }

    Surd& operator+=(const Surd& o) { return *this = *this + o; }
    Surd& operator-=(const Surd& o) { return *this = *this - o; }

    friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [r, c] : terms_) {
            if (!first) {
                out += " + ";
            }
            first = false;
            out += to_display_string(c);
            if (r != 1) {
                out += "*sqrt(" + r.get_str() + ")";
            }
        }
        return out;
    }

private:
    void add_term(const Integer& radicand, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.emplace(radicand, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// n = outside^2 * radicand with radicand squarefree (trial division; the
    /// integers here are small products of ladder indices).
    static std::pair<Integer, Integer> split_square(Integer n) {
        Integer outside = 1;
        Integer radicand = 1;
        for (Integer f = 2; f * f <= n; ++f) {
            while (n % (f * f) == 0) {
                n /= f * f;
                outside *= f;
            }
            if (n % f == 0) {
                n /= f;
                radicand *= f;
            }
        }
        radicand *= n;
        return {outside, radicand};
    }

    std::map<Integer, Rational> terms_;
};

using SurdMatrix = std::vector<std::vector<Surd>>;

inline SurdMatrix zero_matrix(std::size_t n) { return SurdMatrix(n, std::vector<Surd>(n)); }

inline SurdMatrix operator*(const SurdMatrix& a, const SurdMatrix& b) {
    const std::size_t n = a.size();
    SurdMatrix out = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (!b[k][j].is_zero()) {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    return out;
}

inline SurdMatrix operator-(const SurdMatrix& a, const SurdMatrix& b) {
    SurdMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out[i][j] -= b[i][j];
        }
    }
    return out;
}

inline SurdMatrix operator+(const SurdMatrix& a, const SurdMatrix& b) {
    SurdMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out[i][j] += b[i][j];
        }
    }
    return out;
}

inline SurdMatrix scaled(const SurdMatrix& a, const Rational& s) {
    SurdMatrix out = a;
    for (auto& row : out) {
        for (auto& v : row) {
            v = v * Surd(s);
        }
    }
    return out;
}

inline SurdMatrix transpose(const SurdMatrix& a) {
    SurdMatrix out = zero_matrix(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out[j][i] = a[i][j];
        }
    }
    return out;
}

inline SurdMatrix commutator(const SurdMatrix& a, const SurdMatrix& b) { return a * b - b * a; }

} // namespace ghsi

#endif // GHSI_SURD_HPP
