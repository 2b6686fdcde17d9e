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

#include "corrconc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "corrconc/errors.hpp"

namespace corrconc {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 7> f_lo{};
    std::array<double, 7> f_hi{};
    const double f_center = f(center);
    double kronrod = f_center * kWgk[7];
    double gauss = f_center * kWg[3];
    double res_abs = std::fabs(kronrod);

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f_lo[j] = f(center - dx);
        f_hi[j] = f(center + dx);
        const double pair = f_lo[j] + f_hi[j];
        kronrod += kWgk[j] * pair;
        res_abs += kWgk[j] * (std::fabs(f_lo[j]) + std::fabs(f_hi[j]));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * pair;
        }
    }

    const double mean = 0.5 * kronrod;
    double res_asc = kWgk[7] * std::fabs(f_center - mean);
    for (int j = 0; j < 7; ++j) {
        res_asc += kWgk[j] * (std::fabs(f_lo[j] - mean) + std::fabs(f_hi[j] - mean));
    }

    const double value = kronrod * half;
    res_abs *= std::fabs(half);
    res_asc *= std::fabs(half);
    double error = std::fabs((kronrod - gauss) * half);
    if (res_asc != 0.0 && error != 0.0) {
        error = res_asc * std::fmin(1.0, std::pow(200.0 * error / res_asc, 1.5));
    }
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        error = std::fmax(50.0 * eps * res_abs, error);
    }
    return Segment{a, b, value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           const QuadratureOptions& opts) {
    if (breakpoints.size() < 2) {
        throw DomainError("quadrature needs at least two breakpoints");
    }
    std::priority_queue<Segment> queue;
    int evaluations = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] <= breakpoints[i + 1])) {
            throw DomainError("quadrature breakpoints must be ascending");
        }
        if (breakpoints[i] == breakpoints[i + 1]) {
            continue;
        }
        queue.push(gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]));
        evaluations += 15;
    }

    auto totals = [&queue]() {
        auto copy = queue;
        double value = 0.0;
        double error = 0.0;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
        return std::pair{value, error};
    };

    double value = 0.0;
    double error = 0.0;
    std::tie(value, error) = totals();

    int subdivisions = 0;
    while (!queue.empty() && error > std::fmax(opts.abs_tol, opts.rel_tol * std::fabs(value))) {
        if (subdivisions >= opts.max_subdivisions) {
            throw QuadratureError("adaptive quadrature did not converge", value, error);
        }
        const Segment worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw QuadratureError("quadrature interval can no longer be bisected", value, error);
        }
        queue.pop();
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        evaluations += 30;
        queue.push(left);
        queue.push(right);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        ++subdivisions;
        if (subdivisions % 64 == 0) {
            std::tie(value, error) = totals();
        }
    }
    std::tie(value, error) = totals();
    if (!std::isfinite(value)) {
        throw QuadratureError("integrand produced a non-finite value", value, error);
    }
    return QuadratureResult{value, error, evaluations};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
    if (b < a) {
        auto r = integrate(f, b, a, opts);
        r.value = -r.value;
        return r;
    }
    const std::array<double, 2> points{a, b};
    return integrate(f, points, opts);
}

}  // namespace corrconc
