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

#include <cmath>
#include <limits>
#include <vector>

#include "corrconc/errors.hpp"
#include "corrconc/gammakit.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace corrconc;

// Reference values computed with mpmath at 40 digits.
TEST_CASE("log_gamma matches high-precision references", "[gammakit]") {
    struct Ref {
        double z;
        double value;
    };
    const std::vector<Ref> refs = {
        {0.5, 0.5723649429247000870717137},     {0.75, 0.203280951431295371481433},
        {1.25, -0.0982718364218131614638538},   {1.5, -0.1207822376352452223455184},
        {1.9, -0.03898427592308333003878424},   {2.1, 0.04543773854448513589566231},
        {2.5, 0.2846828704729191596324947},     {3.7, 1.428072326665387921872381},
        {10.25, 13.36802367147604629543091},    {14.99, 25.16448116382550587931464},
        {15.01, 25.21796809547518728917148},    {123.456, 469.6055471299294687300692},
        {10000.3, 82102.48058805390013114489},  {1e6, 12815504.56914761165997697},
    };
    for (const auto& r : refs) {
        INFO("z = " << r.z);
        CHECK_THAT(log_gamma(r.z), WithinAbs(r.value, 1e-13 * std::max(1.0, std::fabs(r.value))));
    }
}

TEST_CASE("log_gamma exact points", "[gammakit]") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK_THAT(log_gamma(3.0), WithinAbs(std::log(2.0), 1e-15));
    CHECK_THAT(log_gamma(0.5), WithinAbs(0.5 * std::log(M_PI), 1e-15));
    double lf = 0.0;
    for (int k = 2; k < 60; ++k) {
        lf += std::log(static_cast<double>(k));
        CHECK_THAT(log_gamma(k + 1.0), WithinRel(lf, 1e-14));
    }
}

TEST_CASE("log_gamma rejects non-positive arguments", "[gammakit]") {
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
    CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
}

TEST_CASE("log_gamma recurrence on a dense grid", "[gammakit][property]") {
    for (double z = 0.5; z <= 1e5; z *= 1.0137) {
        const double lhs = log_gamma(z + 1.0) - log_gamma(z);
        // 1e-12 plus the cancellation floor of subtracting two large values.
        const double floor = 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(log_gamma(z + 1.0));
        INFO("z = " << z);
        CHECK_THAT(lhs, WithinAbs(std::log(z), 1e-12 + floor));
    }
}

TEST_CASE("log_gamma_ratio against references", "[gammakit]") {
    CHECK_THAT(log_gamma_ratio(501, 500.5), WithinAbs(3.107554049169429254651553, 1e-13));
    CHECK_THAT(log_gamma_ratio(100000.5, 100000), WithinAbs(5.756461482485114215253312, 1e-13));
    CHECK_THAT(log_gamma_ratio(20000, 20000.5), WithinAbs(-4.951737526268064673786265, 1e-13));
    CHECK_THAT(log_gamma_ratio(1e6, 999999.25), WithinAbs(10.36163226222293214043741, 1e-12));
}

TEST_CASE("log_gamma_ratio is antisymmetric", "[gammakit][property]") {
    const std::vector<double> grid = {0.5, 0.9, 1.5, 3.25, 7.0, 40.5, 1e3, 2e4, 5e5};
    for (double a : grid) {
        for (double b : grid) {
            CHECK_THAT(log_gamma_ratio(a, b) + log_gamma_ratio(b, a), WithinAbs(0.0, 1e-13));
        }
        CHECK(log_gamma_ratio(a, a) == 0.0);
    }
}

TEST_CASE("gamma_ratio stays finite for huge arguments", "[gammakit]") {
    const auto g = gamma_ratio(2000.5, 2000.0);
    CHECK(g.sign == 1);
    CHECK(std::isfinite(g.value()));
    CHECK_THAT(g.value(), WithinRel(std::sqrt(2000.0), 1e-4));
}

TEST_CASE("kappa references and limits", "[gammakit]") {
    CHECK_THAT(kappa(1.0), WithinRel(2.0 / M_PI, 1e-14));
    CHECK_THAT(kappa(5.0), WithinRel(0.9460660635347349410385094, 1e-13));
    CHECK_THAT(kappa(100.0), WithinRel(0.9974906015775506478288581, 1e-13));
    CHECK_THAT(kappa(1e6), WithinRel(0.9999997499999062499765625, 1e-12));
    CHECK_THAT(kappa(0.75), WithinRel(0.4569465810444636253749666, 1e-13));
    CHECK_THAT(kappa(1e6), WithinAbs(1.0, 1e-6));
}

// kappa(n/2) >= sqrt(1 - 1/n) does not hold: kappa(5) = 0.94607 < 0.94868.
// The weaker chain 1 - 1/n <= kappa(n/2) <= 1 does.
TEST_CASE("kappa(n/2) sits just below sqrt(1 - 1/n)", "[gammakit]") {
    CHECK(kappa(5.0) < std::sqrt(1.0 - 1.0 / 10.0));
    CHECK_THAT(kappa(5.0), WithinAbs(std::sqrt(0.9), 3e-3));
}

TEST_CASE("kappa domain", "[gammakit]") {
    CHECK_THROWS_AS(kappa(0.5), DomainError);
    CHECK_THROWS_AS(kappa(-1.0), DomainError);
    CHECK_THROWS_AS(kappa_stirling(0.5), DomainError);
}

TEST_CASE("kappa is monotone", "[gammakit][property]") {
    double prev = 0.0;
    for (double z = 0.5 + 1e-6; z <= 1e6; z *= 1.01) {
        const double k = kappa(z);
        INFO("z = " << z);
        CHECK(k >= prev);
        prev = k;
    }
}

TEST_CASE("kappa(n/2) bound chain", "[gammakit][property]") {
    for (int n = 3; n <= 200; ++n) {
        const double k = kappa(n / 2.0);
        INFO("n = " << n);
        CHECK(1.0 - 1.0 / n <= k);
        CHECK(k < std::sqrt(1.0 - 1.0 / n));
        CHECK(k <= 1.0);
    }
}

TEST_CASE("kappa_stirling converges to kappa", "[gammakit]") {
    CHECK_THAT(kappa_stirling(5.0), WithinRel(kappa(5.0), 1e-2));
    CHECK_THAT(kappa_stirling(100.0), WithinRel(kappa(100.0), 1e-4));
    const double s1 = kappa_stirling(1.0);
    CHECK(std::isfinite(s1));
    CHECK(s1 > 0.0);
    double prev_err = 1.0;
    for (double z : {2.0, 8.0, 32.0, 128.0, 512.0}) {
        const double err = std::fabs(kappa_stirling(z) / kappa(z) - 1.0);
        CHECK(err < prev_err);
        prev_err = err;
    }
}
