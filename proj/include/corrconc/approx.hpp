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

// Closed-form mean, variance and second-moment approximations for R, the
// two variance upper bounds and the sub-Gaussian central-moment envelope.

#include "corrconc/model.hpp"

namespace corrconc {

struct VarianceBounds {
    /// (1 - rho^2)^2 / (n - 1)
    double approx = 0.0;
    /// [(1 - rho^2)^2 + (1 - rho^2)] / (n - 1)
    double upper_conservative = 0.0;
    /// 2 (1 - rho^2)^2 / (n - 1)
    double upper_aggressive = 0.0;
};

/// sqrt(1 - 1/n) * rho
double mean_approx(const ModelParams& params);

/// (1 - rho^2)^2 / (n - 1)
double var_approx(const ModelParams& params);

/// rho^2 + (1 - rho^2)^2 / (n - 1)
double second_moment_approx(const ModelParams& params);

VarianceBounds variance_bounds(const ModelParams& params);

/// (2m)! / (2^m m!) * (sqrt(2) nu)^{2m} with nu^2 = var_approx(params).
double central_even_moment_bound(int m, const ModelParams& params);

}  // namespace corrconc
