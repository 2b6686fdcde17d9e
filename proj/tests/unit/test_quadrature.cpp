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

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>

#include "corrconc/errors.hpp"
#include "corrconc/quadrature.hpp"

using Catch::Matchers::WithinAbs;
using namespace corrconc;

TEST_CASE("polynomials are integrated exactly", "[quadrature]") {
    const auto r = integrate([](double x) { return x * x; }, -1.0, 1.0);
    CHECK_THAT(r.value, WithinAbs(2.0 / 3.0, 1e-15));
    CHECK(r.evaluations == 15);
}

TEST_CASE("smooth transcendental integrands", "[quadrature]") {
    CHECK_THAT(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value,
               WithinAbs(std::exp(1.0) - 1.0, 1e-14));
    CHECK_THAT(integrate([](double x) { return std::cos(x); }, 0.0, M_PI / 2).value,
               WithinAbs(1.0, 1e-14));
}

TEST_CASE("sharp peak is resolved with breakpoints", "[quadrature]") {
    const double c = 0.3;
    const auto f = [c](double x) { return 1e-3 / ((x - c) * (x - c) + 1e-6); };
    const std::array<double, 3> bp = {-1.0, c, 1.0};
    const double exact = (std::atan((1.0 - c) / 1e-3) - std::atan((-1.0 - c) / 1e-3));
    const auto r = integrate(f, bp);
    CHECK_THAT(r.value, WithinAbs(exact, 1e-10));
    CHECK(r.abs_error >= 0.0);
}

TEST_CASE("integrable endpoint singularity converges", "[quadrature]") {
    // 1/sqrt(x) on (0, 1]; Gauss-Kronrod never evaluates the endpoint.
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                             QuadratureOptions{1e-10, 1e-10, 4000});
    CHECK_THAT(r.value, WithinAbs(2.0, 1e-8));
}

TEST_CASE("budget exhaustion raises with estimate", "[quadrature]") {
    const auto f = [](double x) { return std::sin(1.0 / x) / x; };
    try {
        integrate(f, 1e-6, 1.0, QuadratureOptions{1e-15, 1e-15, 5});
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.achieved_error() > 0.0);
    }
}

TEST_CASE("reversed and empty ranges", "[quadrature]") {
    const auto f = [](double x) { return x; };
    CHECK_THAT(integrate(f, 1.0, 0.0).value, WithinAbs(-0.5, 1e-15));
    CHECK(integrate(f, 0.25, 0.25).value == 0.0);
}
