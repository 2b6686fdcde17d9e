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

#include "corrconc/gammakit.hpp"

#include <array>
#include <cmath>

#include "corrconc/errors.hpp"

namespace corrconc {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// zeta(k) - 1 for k = 2..41.
constexpr std::array<double, 40> kZetaMinusOne = {
    6.44934066848226406066e-01, 2.02056903159594292152e-01, 8.23232337111381856642e-02,
    3.69277551433699266492e-02, 1.73430619844491401560e-02, 8.34927738192282713203e-03,
    4.07735619794433960111e-03, 2.00839282608221425530e-03, 9.94575127818085255593e-04,
    4.94188604119464528625e-04, 2.46086553308048319906e-04, 1.22713347578489145439e-04,
    6.12481350587048276653e-05, 3.05882363070204932689e-05, 1.52822594086518709648e-05,
    7.63719763789976256827e-06, 3.81729326499984021842e-06, 1.90821271655393897155e-06,
    9.53962033872796212006e-07, 4.76932986787806446824e-07, 2.38450502727733004353e-07,
    1.19219925965311063718e-07, 5.96081890512594800969e-08, 2.98035035146522792822e-08,
    1.49015548283650426809e-08, 7.45071178983543006094e-09, 3.72533402478845728320e-09,
    1.86265972351304914216e-09, 9.31327432419668165620e-10, 4.65662906503378365753e-10,
    2.32831183367650533586e-10, 1.16415501727005193112e-10, 5.82077208790270145017e-11,
    2.91038504449710000529e-11, 1.45519218910419848941e-11, 7.27595983505748179627e-12,
    3.63797954737865086266e-12, 1.81898965030706607072e-12, 9.09494784026388840724e-13,
    4.54747378304215421834e-13,
};

// B_{2k} / (2k (2k - 1)) for k = 1..8.
constexpr std::array<double, 8> kStirlingCoeffs = {
    1.0 / 12.0,    -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,  -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

constexpr double kStirlingThreshold = 15.0;

void check_positive(double z) {
    if (!std::isfinite(z) || z <= 0.0) {
        throw DomainError("log-gamma argument must be positive and finite");
    }
}

// sum_{k>=2} (-1)^k (zeta(k) - 1) x^k / k for |x| <= 1/2.
double zeta_tail(double x) {
    double acc = 0.0;
    for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
        const int k = static_cast<int>(i) + 2;
        const double c = kZetaMinusOne[i] / k;
        acc = acc * x + (k % 2 == 0 ? c : -c);
    }
    return acc * x * x;
}

// Asymptotic tail sum_k c_k z^{1-2k}.
double stirling_tail(double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double acc = 0.0;
    for (std::size_t i = kStirlingCoeffs.size(); i-- > 0;) {
        acc = acc * inv2 + kStirlingCoeffs[i];
    }
    return acc * inv;
}

double log_gamma_stirling(double z) {
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + stirling_tail(z);
}

}  // namespace

double log_gamma(double z) {
    check_positive(z);
    if (z >= kStirlingThreshold) {
        return log_gamma_stirling(z);
    }
    if (z < 0.5) {
        // Gamma(z) = Gamma(z + 1) / z
        return log_gamma(z + 1.0) - std::log(z);
    }
    if (z < 1.5) {
        const double x = z - 1.0;
        return -std::log1p(x) + x * (1.0 - kEulerGamma) + zeta_tail(x);
    }
    if (z < 2.5) {
        const double x = z - 2.0;
        return x * (1.0 - kEulerGamma) + zeta_tail(x);
    }
    double w = z;
    double product = 1.0;
    while (w >= 2.5) {
        w -= 1.0;
        product *= w;
    }
    return std::log(product) + log_gamma(w);
}

double log_gamma_ratio(double a, double b) {
    check_positive(a);
    check_positive(b);
    if (a == b) {
        return 0.0;
    }
    if (a < b) {
        return -log_gamma_ratio(b, a);  // exact antisymmetry
    }
    if (b >= kStirlingThreshold) {
        // Difference of Stirling series with the large terms combined, so
        // nothing cancels when a - b is small next to a and b.
        const double d = a - b;
        return (a - 0.5) * std::log1p(d / b) + d * (std::log(b) - 1.0) +
               (stirling_tail(a) - stirling_tail(b));
    }
    return log_gamma(a) - log_gamma(b);
}

GammaRatio gamma_ratio(double a, double b) {
    return GammaRatio{log_gamma_ratio(a, b), 1};
}

double kappa(double z) {
    if (!std::isfinite(z) || z <= 0.5) {
        throw DomainError("kappa requires z > 1/2");
    }
    return std::exp(log_gamma_ratio(z, z + 0.5) + log_gamma_ratio(z, z - 0.5));
}

double kappa_stirling(double z) {
    if (!std::isfinite(z) || z <= 0.5) {
        throw DomainError("kappa_stirling requires z > 1/2");
    }
    const double lead = std::sqrt(1.0 - 1.0 / (z + 0.5));
    return lead * std::exp(-(z - 0.5) * std::log1p(-1.0 / (4.0 * z * z)));
}

}  // namespace corrconc
