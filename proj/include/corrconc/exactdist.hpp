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

// Exact finite-sample distribution of the sample correlation coefficient R
// under a bivariate Gaussian model: density, moment series and a
// quadrature route for the same moments.

#include "corrconc/model.hpp"

namespace corrconc {

/// A series moment together with its truncation diagnostics.
struct MomentResult {
    double value = 0.0;
    int terms_used = 0;
    /// Geometric-tail bound on the discarded part of the series.
    double truncation_estimate = 0.0;
};

/// f_R(r) for r in [-1, 1]. Throws DegenerateError when |rho| = 1.
/// For n = 3 the density is infinite at r = +-1.
double density_at(const ModelParams& params, double r, const SeriesConfig& cfg = {});

/// g_m(k): integral of r^{m+k} (1 - r^2)^{(n-4)/2} over [-1, 1].
double g_m(int m, int k, int n);

/// E(R^m) from the moment series. Exact rho^m when |rho| = 1.
MomentResult moment(int m, const ModelParams& params, const SeriesConfig& cfg = {});

/// E(R^m) by adaptive quadrature of r^m f_R(r); independent of the moment
/// series. n = 3 is integrated in theta with r = sin(theta).
double moment_quadrature(int m, const ModelParams& params, const SeriesConfig& cfg = {});

/// var(R) = E(R^2) - E(R)^2 from the moment series.
double exact_variance(const ModelParams& params, const SeriesConfig& cfg = {});

/// E{(R - center)^order} by binomial expansion over series moments.
double central_moment(int order, double center, const ModelParams& params,
                      const SeriesConfig& cfg = {});

}  // namespace corrconc
