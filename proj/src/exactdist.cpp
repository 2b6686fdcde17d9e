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

#include "corrconc/exactdist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "corrconc/gammakit.hpp"
#include "corrconc/quadrature.hpp"

namespace corrconc {
namespace {

constexpr double kRescaleAbove = 1e250;

// Sum of a positive series 1 + t_1 + t_2 + ... with t_{j+1} = t_j * ratio(j).
// The total is exp(log_scale) * sum.
struct ChainSum {
    double log_scale = 0.0;
    double sum = 1.0;
    double tail = 0.0;
    int terms = 1;
};

template <class Ratio>
ChainSum sum_chain(Ratio&& ratio, const SeriesConfig& cfg, int terms_before) {
    ChainSum out;
    double term = 1.0;
    for (int j = 0;; ++j) {
        const double r = ratio(j);
        term *= r;
        if (term == 0.0) {
            out.tail = 0.0;
            return out;
        }
        out.sum += term;
        ++out.terms;
        if (r < 1.0) {
            out.tail = term * r / (1.0 - r);
            if (out.tail <= cfg.rel_tol * out.sum) {
                return out;
            }
        }
        if (terms_before + out.terms >= cfg.max_terms) {
            throw TruncationError("series did not converge within max_terms",
                                  std::exp(out.log_scale) * out.sum, terms_before + out.terms);
        }
        if (term > kRescaleAbove) {
            const double shift = std::log(term);
            out.log_scale += shift;
            out.sum /= term;
            term = 1.0;
        }
    }
}

// log of 2^{n-3} (1 - rho^2)^{(n-1)/2} / (pi Gamma(n - 2)).
double log_leading_constant(const ModelParams& p) {
    const int n = p.n();
    return (n - 3) * std::numbers::ln2 + 0.5 * (n - 1) * std::log(p.one_minus_rho2()) -
           std::log(std::numbers::pi) - log_gamma(n - 2.0);
}

// f_R(r) / (1 - r^2)^{(n-4)/2}, the part of the density that stays finite
// at r = +-1.
double density_series(const ModelParams& p, double r, const SeriesConfig& cfg) {
    const double n = p.n();
    const double x = 2.0 * r * p.rho();
    const double log_c = log_leading_constant(p);

    // Even k: Gamma((n-1+k)/2)^2 x^k / k!, stepping k -> k + 2.
    const double x2 = x * x;
    const ChainSum even = sum_chain(
        [&](int j) {
            const double k = 2.0 * j;
            const double g = 0.5 * (n - 1.0 + k);
            return g * g * x2 / ((k + 1.0) * (k + 2.0));
        },
        cfg, 0);
    const double log_even = 2.0 * log_gamma(0.5 * (n - 1.0)) + even.log_scale;
    if (x == 0.0) {
        return std::exp(log_c + log_even) * even.sum;
    }

    const ChainSum odd = sum_chain(
        [&](int j) {
            const double k = 2.0 * j + 1.0;
            const double g = 0.5 * (n - 1.0 + k);
            return g * g * x2 / ((k + 1.0) * (k + 2.0));
        },
        cfg, even.terms);
    const double log_odd = 2.0 * log_gamma(0.5 * n) + std::log(std::fabs(x)) + odd.log_scale;
    const double sign = x > 0.0 ? 1.0 : -1.0;

    const double top = std::max(log_even, log_odd);
    const double combined =
        even.sum * std::exp(log_even - top) + sign * odd.sum * std::exp(log_odd - top);
    return std::max(0.0, std::exp(log_c + top) * combined);
}

void check_order(int m) {
    if (m < 0) {
        throw DomainError("moment order must be non-negative");
    }
}

MomentResult moment_nonnegative_rho(int m, const ModelParams& p, const SeriesConfig& cfg) {
    const int n = p.n();
    const double rho = p.rho();
    const int k0 = m % 2;
    if (k0 == 1 && rho == 0.0) {
        return MomentResult{0.0, 1, 0.0};
    }

    const double log_first = log_leading_constant(p) + 2.0 * log_gamma(0.5 * (n - 1 + k0)) +
                             (k0 == 1 ? std::log(2.0 * rho) : 0.0) + std::log(g_m(m, k0, n));

    const double rho2 = rho * rho;
    const ChainSum chain = sum_chain(
        [&](int j) {
            const double k = k0 + 2.0 * j;
            const double g = 0.5 * (n - 1.0 + k);
            return g * g * 4.0 * rho2 / ((k + 1.0) * (k + 2.0)) * (m + k + 1.0) /
                   (n + m + k - 1.0);
        },
        cfg, 0);

    const double scale = std::exp(log_first + chain.log_scale);
    return MomentResult{scale * chain.sum, chain.terms, scale * chain.tail};
}

}  // namespace

double density_at(const ModelParams& params, double r, const SeriesConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(r) || r < -1.0 || r > 1.0) {
        throw DomainError("density argument must lie in [-1, 1]");
    }
    if (params.degenerate()) {
        throw DegenerateError("R is degenerate when |rho| = 1 and has no density");
    }
    const int n = params.n();
    const double one_minus_r2 = (1.0 - r) * (1.0 + r);
    if (one_minus_r2 == 0.0) {
        if (n == 3) {
            return std::numeric_limits<double>::infinity();
        }
        if (n > 4) {
            return 0.0;
        }
    }
    const double weight = n == 4 ? 1.0 : std::pow(one_minus_r2, 0.5 * (n - 4));
    return density_series(params, r, cfg) * weight;
}

double g_m(int m, int k, int n) {
    if (m < 0 || k < 0) {
        throw DomainError("g_m requires non-negative m and k");
    }
    if (n < 3) {
        throw DomainError("g_m requires n >= 3");
    }
    if ((m + k) % 2 != 0) {
        return 0.0;
    }
    const double s = m + k;
    return std::exp(log_gamma(0.5 * (s + 1.0)) + log_gamma(0.5 * (n - 2.0)) -
                    log_gamma(0.5 * (n + s - 1.0)));
}

MomentResult moment(int m, const ModelParams& params, const SeriesConfig& cfg) {
    check_order(m);
    cfg.validate();
    if (params.degenerate()) {
        return MomentResult{(m % 2 == 0) ? 1.0 : params.rho(), 0, 0.0};
    }
    if (params.rho() < 0.0) {
        MomentResult mirrored = moment_nonnegative_rho(m, params.with_rho(-params.rho()), cfg);
        if (m % 2 == 1) {
            mirrored.value = -mirrored.value;
        }
        return mirrored;
    }
    return moment_nonnegative_rho(m, params, cfg);
}

double moment_quadrature(int m, const ModelParams& params, const SeriesConfig& cfg) {
    check_order(m);
    cfg.validate();
    if (params.degenerate()) {
        throw DegenerateError("R is degenerate when |rho| = 1 and has no density");
    }
    const double rho = params.rho();

    if (params.n() == 3) {
        // r = sin(theta): (1 - r^2)^{-1/2} dr = d(theta).
        auto integrand = [&](double theta) {
            const double r = std::sin(theta);
            return std::pow(r, m) * density_series(params, r, cfg);
        };
        const double half_pi = 0.5 * std::numbers::pi;
        std::vector<double> points{-half_pi, 0.0, half_pi};
        if (rho != 0.0) {
            points.push_back(std::asin(rho));
        }
        std::sort(points.begin(), points.end());
        return integrate(integrand, points).value;
    }

    auto integrand = [&](double r) { return std::pow(r, m) * density_at(params, r, cfg); };
    std::vector<double> points{-1.0, 0.0, 1.0};
    if (rho != 0.0) {
        points.push_back(rho);
    }
    std::sort(points.begin(), points.end());
    return integrate(integrand, points).value;
}

double exact_variance(const ModelParams& params, const SeriesConfig& cfg) {
    if (params.degenerate()) {
        return 0.0;
    }
    const double m1 = moment(1, params, cfg).value;
    const double m2 = moment(2, params, cfg).value;
    return m2 - m1 * m1;
}

double central_moment(int order, double center, const ModelParams& params,
                      const SeriesConfig& cfg) {
    check_order(order);
    double total = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= order; ++j) {
        const double mj = j == 0 ? 1.0 : moment(j, params, cfg).value;
        total += binom * mj * std::pow(-center, order - j);
        binom = binom * (order - j) / (j + 1);
    }
    return total;
}

}  // namespace corrconc
