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

// Concentration tail bounds for |R - rho| and the symmetric coverage
// intervals obtained by inverting them.

#include <optional>
#include <string_view>

#include "corrconc/model.hpp"

namespace corrconc {

enum class TailBoundKind {
    Bernstein,       ///< 2 exp[-n t^2 / (2 (1 + 2 n t))]
    Conservative,    ///< 2 exp{-n t^2 / (8 (1 - rho^2)^2)}, interval C0
    Aggressive,      ///< 2 exp{-n t^2 / (4 (1 - rho^2)^2)}, interval C1
    MegaAggressive,  ///< 2 exp{-n t^2 / (2 (1 - rho^2)^2)}, interval C2
};

inline constexpr TailBoundKind kSubGaussianKinds[] = {
    TailBoundKind::Conservative, TailBoundKind::Aggressive, TailBoundKind::MegaAggressive};

/// Divisor c in the sub-Gaussian exponent: 8, 4 or 2. Throws for Bernstein.
double sub_gaussian_divisor(TailBoundKind kind);

bool is_sub_gaussian(TailBoundKind kind) noexcept;

/// "bernstein", "c0", "c1", "c2"
std::string_view kind_name(TailBoundKind kind) noexcept;
std::optional<TailBoundKind> parse_kind(std::string_view name) noexcept;

/// Which Bernstein display to evaluate. Statement uses n; Proof uses
/// 2 exp[-t^2 / (2 (nu^2 + 2 t))] with nu^2 = 1/(n - 1).
enum class BernsteinForm { Statement, Proof };

/// Sample size entering the bounds: n (default) or n - 1.
enum class SizeConvention { SampleSize, DegreesOfFreedom };

struct BoundOptions {
    SizeConvention size = SizeConvention::SampleSize;
    BernsteinForm bernstein = BernsteinForm::Statement;
};

struct TailBound {
    double raw = 0.0;      ///< bound as displayed; may exceed 1
    double clamped = 0.0;  ///< min(1, raw)
    bool degenerate = false;
};

/// Bound on Pr(|R - rho| > t) for t > 0. For |rho| = 1 the sub-Gaussian
/// kinds return 0 with `degenerate` set.
TailBound tail_bound(TailBoundKind kind, const ModelParams& params, double t,
                     const BoundOptions& opts = {});

/// Symmetric interval (rho - t, rho + t) with tail_bound(t) = alpha.
struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    double half_width = 0.0;
    double alpha = 0.05;
    TailBoundKind kind = TailBoundKind::Conservative;
    /// Set when the raw interval leaves [-1, 1].
    bool clipped = false;

    double level() const noexcept { return 1.0 - alpha; }
    double clipped_lower() const noexcept { return lower < -1.0 ? -1.0 : lower; }
    double clipped_upper() const noexcept { return upper > 1.0 ? 1.0 : upper; }
    /// Closed-interval membership against the raw bounds.
    bool contains(double r) const noexcept { return lower <= r && r <= upper; }
};

/// Closed form t = (1 - rho^2) sqrt(c ln(2/alpha) / n) for the sub-Gaussian
/// kinds; bracketing + bisection for Bernstein. alpha >= 2 is infeasible.
Interval coverage_interval(TailBoundKind kind, const ModelParams& params, double alpha,
                           const BoundOptions& opts = {});

/// Half-width t solving tail_bound(t) = alpha by root finding, for every kind.
double invert_tail_numeric(TailBoundKind kind, const ModelParams& params, double alpha,
                           const BoundOptions& opts = {});

/// sum_{j=m+1}^{2m} C(2m, j) (-1)^j E(R^2)^j (rho^2)^{m-j}, with E(R^2) from
/// the exact series. Reported as a diagnostic only; undefined at rho = 0.
double semi_telescopic_residual(int m, const ModelParams& params, const SeriesConfig& cfg = {});

}  // namespace corrconc
