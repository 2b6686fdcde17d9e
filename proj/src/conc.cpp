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

#include "corrconc/conc.hpp"

#include <cmath>

#include "corrconc/exactdist.hpp"

namespace corrconc {
namespace {

constexpr int kMaxBracketDoublings = 1100;
constexpr int kMaxBisections = 2000;

double effective_size(const ModelParams& params, SizeConvention size) {
    return size == SizeConvention::SampleSize ? params.n() : params.n() - 1.0;
}

double bound_value(TailBoundKind kind, const ModelParams& params, double t,
                   const BoundOptions& opts) {
    if (kind == TailBoundKind::Bernstein) {
        if (opts.bernstein == BernsteinForm::Proof) {
            const double nu2 = 1.0 / (params.n() - 1.0);
            return 2.0 * std::exp(-t * t / (2.0 * (nu2 + 2.0 * t)));
        }
        const double n = effective_size(params, opts.size);
        return 2.0 * std::exp(-n * t * t / (2.0 * (1.0 + 2.0 * n * t)));
    }
    const double a = params.one_minus_rho2();
    const double n = effective_size(params, opts.size);
    return 2.0 * std::exp(-n * t * t / (sub_gaussian_divisor(kind) * a * a));
}

void check_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw DomainError("alpha must be positive");
    }
    if (alpha >= 2.0) {
        throw InfeasibleError("tail bounds never fall below 2; alpha must be < 2");
    }
}

Interval make_interval(TailBoundKind kind, const ModelParams& params, double alpha, double t) {
    Interval iv;
    iv.lower = params.rho() - t;
    iv.upper = params.rho() + t;
    iv.half_width = t;
    iv.alpha = alpha;
    iv.kind = kind;
    iv.clipped = iv.lower < -1.0 || iv.upper > 1.0;
    return iv;
}

}  // namespace

double sub_gaussian_divisor(TailBoundKind kind) {
    switch (kind) {
        case TailBoundKind::Conservative:
            return 8.0;
        case TailBoundKind::Aggressive:
            return 4.0;
        case TailBoundKind::MegaAggressive:
            return 2.0;
        case TailBoundKind::Bernstein:
            break;
    }
    throw DomainError("Bernstein bound has no sub-Gaussian divisor");
}

bool is_sub_gaussian(TailBoundKind kind) noexcept {
    return kind != TailBoundKind::Bernstein;
}

std::string_view kind_name(TailBoundKind kind) noexcept {
    switch (kind) {
        case TailBoundKind::Bernstein:
            return "bernstein";
        case TailBoundKind::Conservative:
            return "c0";
        case TailBoundKind::Aggressive:
            return "c1";
        case TailBoundKind::MegaAggressive:
            return "c2";
    }
    return "unknown";
}

std::optional<TailBoundKind> parse_kind(std::string_view name) noexcept {
    for (auto kind : {TailBoundKind::Bernstein, TailBoundKind::Conservative,
                      TailBoundKind::Aggressive, TailBoundKind::MegaAggressive}) {
        if (kind_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

TailBound tail_bound(TailBoundKind kind, const ModelParams& params, double t,
                     const BoundOptions& opts) {
    if (!std::isfinite(t) || t <= 0.0) {
        throw DomainError("tail bound requires t > 0");
    }
    if (is_sub_gaussian(kind) && params.degenerate()) {
        return TailBound{0.0, 0.0, true};
    }
    const double raw = bound_value(kind, params, t, opts);
    return TailBound{raw, std::fmin(1.0, raw), false};
}

double invert_tail_numeric(TailBoundKind kind, const ModelParams& params, double alpha,
                           const BoundOptions& opts) {
    check_alpha(alpha);
    if (is_sub_gaussian(kind) && params.degenerate()) {
        return 0.0;
    }
    // Every bound starts at 2 as t -> 0+ and decreases strictly in t.
    auto excess = [&](double t) { return bound_value(kind, params, t, opts) - alpha; };

    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (excess(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > kMaxBracketDoublings || !std::isfinite(hi)) {
            throw InfeasibleError("could not bracket the tail-bound root");
        }
    }
    for (int i = 0; i < kMaxBisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double f = excess(mid);
        if (f == 0.0) {
            return mid;
        }
        (f > 0.0 ? lo : hi) = mid;
    }
    return std::fabs(excess(lo)) < std::fabs(excess(hi)) ? lo : hi;
}

Interval coverage_interval(TailBoundKind kind, const ModelParams& params, double alpha,
                           const BoundOptions& opts) {
    check_alpha(alpha);
    if (!is_sub_gaussian(kind)) {
        return make_interval(kind, params, alpha, invert_tail_numeric(kind, params, alpha, opts));
    }
    if (params.degenerate()) {
        return make_interval(kind, params, alpha, 0.0);
    }
    const double n = effective_size(params, opts.size);
    const double t = params.one_minus_rho2() *
                     std::sqrt(sub_gaussian_divisor(kind) * std::log(2.0 / alpha) / n);
    return make_interval(kind, params, alpha, t);
}

double semi_telescopic_residual(int m, const ModelParams& params, const SeriesConfig& cfg) {
    if (m < 1) {
        throw DomainError("residual order m must be positive");
    }
    const double rho2 = params.rho() * params.rho();
    if (rho2 == 0.0) {
        throw DomainError("residual involves negative powers of rho^2 and is undefined at rho = 0");
    }
    const double second = moment(2, params, cfg).value;
    double binom = 1.0;  // C(2m, j), built up from j = 0
    double total = 0.0;
    for (int j = 0; j <= 2 * m; ++j) {
        if (j > m) {
            const double sign = j % 2 == 0 ? 1.0 : -1.0;
            total += sign * binom * std::pow(second, j) * std::pow(rho2, m - j);
        }
        binom = binom * (2 * m - j) / (j + 1);
    }
    return total;
}

}  // namespace corrconc
