/*
   Copyright 2026 The corrconc Authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace corrconc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// |rho| = 1: R is degenerate and has no density.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A series did not reach its tolerance within the configured term cap.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, double partial_value, int terms_used)
        : Error(what), partial_value_(partial_value), terms_used_(terms_used) {}

    double partial_value() const noexcept { return partial_value_; }
    int terms_used() const noexcept { return terms_used_; }

private:
    double partial_value_;
    int terms_used_;
};

/// Adaptive quadrature stopped before reaching the requested tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate, double achieved_error)
        : Error(what), estimate_(estimate), achieved_error_(achieved_error) {}

    double estimate() const noexcept { return estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double estimate_;
    double achieved_error_;
};

/// No finite half-width makes the tail bound equal to the requested level.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Sample correlation of data with zero sample variance.
class UndefinedCorrelationError : public Error {
public:
    using Error::Error;
};

}  // namespace corrconc
