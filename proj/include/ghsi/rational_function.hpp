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

#ifndef GHSI_RATIONAL_FUNCTION_HPP
#define GHSI_RATIONAL_FUNCTION_HPP

#include "ghsi/polynomial.hpp"

#include <string>
#include <utility>

namespace ghsi {

/// num/den over Q, always reduced with a monic denominator, so equality is
/// plain member-wise equality.
class RationalFunction {
public:
    RationalFunction() : num_{}, den_{QPoly::constant(1)} {}

    RationalFunction(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {} // NOLINT

    RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) {
            throw DivisionByZeroFunction();
        }
        reduce();
    }

    static RationalFunction constant(const Rational& c) { return RationalFunction(QPoly::constant(c)); }
    static RationalFunction x() { return RationalFunction(QPoly::x()); }

    const QPoly& num() const noexcept { return num_; }
    const QPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    /// The numerator, provided the denominator is 1; otherwise NonPolynomialResult.
    const QPoly& as_polynomial() const {
        if (!is_polynomial()) {
            throw NonPolynomialResult(to_string(den_));
        }
        return num_;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) {
            return {a.num_ + b.num_, a.den_};
        }
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) {
            return {a.num_ - b.num_, a.den_};
        }
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }

    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num_ = -out.num_;
        return out;
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        // Cross-cancel first to keep the products small.
        const QPoly g1 = gcd(a.num_, b.den_);
        const QPoly g2 = gcd(b.num_, a.den_);
        RationalFunction out;
        out.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
        out.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
        out.normalize_lead();
        return out;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) {
            throw DivisionByZeroFunction();
        }
        return a * b.inverse();
    }

    friend RationalFunction operator*(const RationalFunction& a, const Rational& s) {
        RationalFunction out = a;
        out.num_ *= s;
        return out;
    }
    friend RationalFunction operator*(const Rational& s, const RationalFunction& a) { return a * s; }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction inverse() const {
        if (is_zero()) {
            throw DivisionByZeroFunction();
        }
        RationalFunction out;
        out.num_ = den_;
        out.den_ = num_;
        out.normalize_lead();
        return out;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rational operator()(const Rational& at) const {
        const Rational d = den_(at);
        if (d == 0) {
            throw PoleEvaluation(to_display_string(at));
        }
        return num_(at) / d;
    }

    double eval(double at) const {
        const double d = eval_double(den_, at);
        if (d == 0.0) {
            throw PoleEvaluation(std::to_string(at));
        }
        return eval_double(num_, at) / d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = QPoly::constant(1);
            return;
        }
        const QPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        normalize_lead();
    }

    void normalize_lead() {
        if (num_.is_zero()) {
            den_ = QPoly::constant(1);
            return;
        }
        const Rational lc = den_.leading();
        if (lc != 1) {
            num_ /= lc;
            den_ /= lc;
        }
    }

    QPoly num_;
    QPoly den_;
};

using RF = RationalFunction;

inline RationalFunction derivative(const RationalFunction& r) {
    // (n/d)' = (n'd - nd') / d^2, reduced.
    return {derivative(r.num()) * r.den() - r.num() * derivative(r.den()), r.den() * r.den()};
}

inline RationalFunction derivative(const RationalFunction& r, unsigned order) {
    RationalFunction out = r;
    for (unsigned k = 0; k < order; ++k) {
        out = derivative(out);
    }
    return out;
}

/// a'/a, reduced.
inline RationalFunction logderiv(const QPoly& a) {
    if (a.is_zero()) {
        throw ZeroPolynomial("logderiv");
    }
    return {derivative(a), a};
}

inline std::string to_string(const RationalFunction& r) {
    if (r.is_polynomial()) {
        return to_string(r.num());
    }
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << to_string(r); }

} // namespace ghsi

#endif // GHSI_RATIONAL_FUNCTION_HPP
