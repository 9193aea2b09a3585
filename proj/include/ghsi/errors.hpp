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

#ifndef GHSI_ERRORS_HPP
#define GHSI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghsi {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact polynomial division left a nonzero remainder. The remainder is kept
/// (serialized) so a broken upstream invariant can be diagnosed.
class InexactDivision : public Error {
public:
    explicit InexactDivision(std::string remainder)
        : Error("inexact polynomial division, remainder " + remainder),
          remainder_(std::move(remainder)) {}
    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

class DivisionByZeroFunction : public Error {
public:
    DivisionByZeroFunction() : Error("division by the zero rational function") {}
};

class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& what) : Error(what + ": zero polynomial") {}
};

class PoleEvaluation : public Error {
public:
    explicit PoleEvaluation(const std::string& at)
        : Error("rational function evaluated at a pole x = " + at) {}
};

/// A quantity that must be a polynomial came out with a nonconstant denominator.
class NonPolynomialResult : public Error {
public:
    explicit NonPolynomialResult(std::string denominator)
        : Error("expected a polynomial, got denominator " + denominator),
          denominator_(std::move(denominator)) {}
    const std::string& denominator() const noexcept { return denominator_; }

private:
    std::string denominator_;
};

class OutOfSequence : public Error {
public:
    explicit OutOfSequence(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class NonConvergence : public Error {
public:
    explicit NonConvergence(int depth)
        : Error("adaptive quadrature did not converge (depth " + std::to_string(depth) + ")"),
          depth_(depth) {}
    int depth() const noexcept { return depth_; }

private:
    int depth_;
};

class InconsistentMatch : public Error {
public:
    explicit InconsistentMatch(const std::string& what) : Error(what) {}
};

} // namespace ghsi

#endif // GHSI_ERRORS_HPP
