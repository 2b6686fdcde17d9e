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

#include <cmath>

#include "corrconc/errors.hpp"

namespace corrconc {

/// Population correlation and sample size of a bivariate Gaussian sample.
class ModelParams {
public:
    ModelParams(double rho, int n) : rho_(rho), n_(n) {
        if (!std::isfinite(rho) || rho < -1.0 || rho > 1.0) {
            throw DomainError("rho must lie in [-1, 1]");
        }
        if (n < 3) {
            throw DomainError("sample size n must be at least 3");
        }
    }

    double rho() const noexcept { return rho_; }
    int n() const noexcept { return n_; }

    /// |rho| = 1, so R = rho almost surely.
    bool degenerate() const noexcept { return std::fabs(rho_) == 1.0; }

    /// 1 - rho^2, computed without cancellation near |rho| = 1.
    double one_minus_rho2() const noexcept { return (1.0 - rho_) * (1.0 + rho_); }

    ModelParams with_rho(double rho) const { return {rho, n_}; }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    double rho_;
    int n_;
};

/// Truncation policy for the infinite moment and density series.
struct SeriesConfig {
    double rel_tol = 1e-14;
    int max_terms = 100000;

    void validate() const {
        if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
            throw DomainError("series rel_tol must be positive");
        }
        if (max_terms < 1) {
            throw DomainError("series max_terms must be at least 1");
        }
    }
};

}  // namespace corrconc
