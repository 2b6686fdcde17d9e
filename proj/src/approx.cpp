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

#include "corrconc/approx.hpp"

#include <cmath>

namespace corrconc {

double mean_approx(const ModelParams& params) {
    return std::sqrt(1.0 - 1.0 / params.n()) * params.rho();
}

double var_approx(const ModelParams& params) {
    const double a = params.one_minus_rho2();
    return a * a / (params.n() - 1);
}

double second_moment_approx(const ModelParams& params) {
    return params.rho() * params.rho() + var_approx(params);
}

VarianceBounds variance_bounds(const ModelParams& params) {
    const double a = params.one_minus_rho2();
    const double dof = params.n() - 1;
    return VarianceBounds{a * a / dof, (a * a + a) / dof, 2.0 * a * a / dof};
}

double central_even_moment_bound(int m, const ModelParams& params) {
    if (m < 1) {
        throw DomainError("central moment order m must be positive");
    }
    // (2m)! / (2^m m!) = (2m - 1)!!
    double double_factorial = 1.0;
    for (int j = 2 * m - 1; j > 1; j -= 2) {
        double_factorial *= j;
    }
    return double_factorial * std::pow(2.0 * var_approx(params), m);
}

}  // namespace corrconc
