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
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "corrconc/corrconc.h"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct ModelGuard {
    corrconc_model* ptr = nullptr;
    ~ModelGuard() { corrconc_model_destroy(ptr); }
};

struct SimGuard {
    corrconc_sim* ptr = nullptr;
    ~SimGuard() { corrconc_sim_destroy(ptr); }
};

}  // namespace

TEST_CASE("model lifecycle and accessors", "[capi]") {
    ModelGuard m;
    REQUIRE(corrconc_model_create(0.56, 10, &m.ptr) == CORRCONC_OK);
    CHECK(corrconc_model_rho(m.ptr) == 0.56);
    CHECK(corrconc_model_n(m.ptr) == 10);
    CHECK(std::string(corrconc_last_error()).empty());
    CHECK(std::string(corrconc_version()) == "1.0.0");
    corrconc_model_destroy(nullptr);
}

TEST_CASE("invalid arguments map to status codes", "[capi]") {
    corrconc_model* bad = nullptr;
    CHECK(corrconc_model_create(1.5, 10, &bad) == CORRCONC_E_DOMAIN);
    CHECK(bad == nullptr);
    CHECK_FALSE(std::string(corrconc_last_error()).empty());
    CHECK(corrconc_model_create(0.5, 2, &bad) == CORRCONC_E_DOMAIN);
    CHECK(corrconc_model_create(0.5, 10, nullptr) == CORRCONC_E_INVALID_ARGUMENT);

    double out = 0.0;
    CHECK(corrconc_density(nullptr, 0.1, &out) == CORRCONC_E_INVALID_ARGUMENT);
    CHECK(corrconc_kappa(0.25, &out) == CORRCONC_E_DOMAIN);
    CHECK(corrconc_log_gamma(-1.0, &out) == CORRCONC_E_DOMAIN);
    CHECK(corrconc_log_gamma(2.0, nullptr) == CORRCONC_E_INVALID_ARGUMENT);

    ModelGuard m;
    REQUIRE(corrconc_model_create(0.2, 10, &m.ptr) == CORRCONC_OK);
    CHECK(corrconc_model_set_series(m.ptr, -1.0, 10) == CORRCONC_E_DOMAIN);
    CHECK(corrconc_model_set_bound_options(m.ptr, static_cast<corrconc_size_convention>(7),
                                           CORRCONC_BERNSTEIN_STATEMENT) ==
          CORRCONC_E_INVALID_ARGUMENT);
    corrconc_tail tail{};
    CHECK(corrconc_tail_bound(m.ptr, static_cast<corrconc_bound_kind>(9), 0.1, &tail) ==
          CORRCONC_E_INVALID_ARGUMENT);
    corrconc_interval iv{};
    CHECK(corrconc_coverage_interval(m.ptr, CORRCONC_C0, 2.5, &iv) == CORRCONC_E_INFEASIBLE);
    CHECK(corrconc_semi_telescopic_residual(m.ptr, 0, &out) == CORRCONC_E_DOMAIN);

    ModelGuard degenerate;
    REQUIRE(corrconc_model_create(1.0, 10, &degenerate.ptr) == CORRCONC_OK);
    CHECK(corrconc_density(degenerate.ptr, 0.1, &out) == CORRCONC_E_DEGENERATE);

    const double same[] = {1.0, 1.0, 1.0};
    const double xs[] = {1.0, 2.0, 3.0};
    CHECK(corrconc_sample_correlation(xs, same, 3, &out) == CORRCONC_E_UNDEFINED);
    CHECK(std::string(corrconc_status_name(CORRCONC_E_TRUNCATION)) == "series truncation");
}

TEST_CASE("numerics through the C API", "[capi]") {
    double out = 0.0;
    REQUIRE(corrconc_log_gamma(0.5, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinAbs(0.5723649429247000870717137, 1e-14));
    REQUIRE(corrconc_log_gamma_ratio(501, 500.5, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinAbs(3.107554049169429254651553, 1e-13));
    REQUIRE(corrconc_kappa(5.0, &out) == CORRCONC_OK);
    double stirling = 0.0;
    REQUIRE(corrconc_kappa_stirling(5.0, &stirling) == CORRCONC_OK);
    CHECK_THAT(stirling, WithinRel(out, 1e-2));
    REQUIRE(corrconc_g_m(2, 0, 4, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinAbs(2.0 / 3.0, 1e-15));

    ModelGuard m;
    REQUIRE(corrconc_model_create(0.56, 10, &m.ptr) == CORRCONC_OK);
    REQUIRE(corrconc_density(m.ptr, 0.3, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinRel(0.7255495032224558607356673, 1e-11));

    corrconc_moment mom{};
    REQUIRE(corrconc_moment_series(m.ptr, 2, &mom) == CORRCONC_OK);
    CHECK_THAT(mom.value, WithinRel(0.35122537328005135881, 1e-12));
    CHECK(mom.terms_used > 0);
    REQUIRE(corrconc_moment_quadrature(m.ptr, 2, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinAbs(mom.value, 1e-8));
    REQUIRE(corrconc_exact_variance(m.ptr, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinRel(0.35122537328005135881 - 0.53779928927267177504 * 0.53779928927267177504, 1e-11));
    REQUIRE(corrconc_central_moment(m.ptr, 1, 0.0, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinRel(0.53779928927267177504, 1e-12));

    REQUIRE(corrconc_mean_approx(m.ptr, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinRel(0.56 * std::sqrt(0.9), 1e-15));
    REQUIRE(corrconc_var_approx(m.ptr, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinRel(0.6864 * 0.6864 / 9.0, 1e-14));
    REQUIRE(corrconc_second_moment_approx(m.ptr, &out) == CORRCONC_OK);
    corrconc_var_bounds vb{};
    REQUIRE(corrconc_variance_bounds(m.ptr, &vb) == CORRCONC_OK);
    CHECK(vb.approx <= vb.upper_aggressive);
    CHECK(vb.upper_aggressive <= vb.upper_conservative);
    REQUIRE(corrconc_central_even_moment_bound(m.ptr, 1, &out) == CORRCONC_OK);
    CHECK_THAT(out, WithinRel(2.0 * vb.approx, 1e-15));
    REQUIRE(corrconc_semi_telescopic_residual(m.ptr, 2, &out) == CORRCONC_OK);
    CHECK(std::isfinite(out));
}

TEST_CASE("truncation fills the partial moment", "[capi]") {
    ModelGuard m;
    REQUIRE(corrconc_model_create(0.999, 100, &m.ptr) == CORRCONC_OK);
    REQUIRE(corrconc_model_set_series(m.ptr, 1e-14, 5) == CORRCONC_OK);
    corrconc_moment mom{};
    CHECK(corrconc_moment_series(m.ptr, 2, &mom) == CORRCONC_E_TRUNCATION);
    CHECK(mom.value > 0.0);
    CHECK(mom.terms_used <= 5);
    CHECK_FALSE(std::string(corrconc_last_error()).empty());
}

TEST_CASE("bounds and intervals through the C API", "[capi]") {
    ModelGuard m;
    REQUIRE(corrconc_model_create(0.0, 10, &m.ptr) == CORRCONC_OK);
    corrconc_interval iv{};
    REQUIRE(corrconc_coverage_interval(m.ptr, CORRCONC_C0, 0.05, &iv) == CORRCONC_OK);
    CHECK_THAT(iv.half_width, WithinAbs(1.7179, 1e-4));
    CHECK(iv.clipped == 1);
    CHECK(iv.kind == CORRCONC_C0);
    CHECK_THAT(iv.level, WithinAbs(0.95, 1e-15));

    corrconc_tail tail{};
    REQUIRE(corrconc_tail_bound(m.ptr, CORRCONC_C0, iv.half_width, &tail) == CORRCONC_OK);
    CHECK_THAT(tail.raw, WithinAbs(0.05, 1e-12));
    CHECK(tail.degenerate == 0);

    double t = 0.0;
    REQUIRE(corrconc_invert_tail_numeric(m.ptr, CORRCONC_C0, 0.05, &t) == CORRCONC_OK);
    CHECK_THAT(t, WithinAbs(iv.half_width, 1e-10));

    REQUIRE(corrconc_coverage_interval(m.ptr, CORRCONC_BERNSTEIN, 0.05, &iv) == CORRCONC_OK);
    const double statement = iv.half_width;
    REQUIRE(corrconc_model_set_bound_options(m.ptr, CORRCONC_SIZE_N_MINUS_1,
                                             CORRCONC_BERNSTEIN_STATEMENT) == CORRCONC_OK);
    REQUIRE(corrconc_coverage_interval(m.ptr, CORRCONC_BERNSTEIN, 0.05, &iv) == CORRCONC_OK);
    CHECK(iv.half_width > statement);
}

TEST_CASE("simulation handle", "[capi]") {
    ModelGuard m;
    REQUIRE(corrconc_model_create(0.56, 10, &m.ptr) == CORRCONC_OK);
    SimGuard a;
    SimGuard b;
    REQUIRE(corrconc_sim_run(m.ptr, 5000, 2023, 0.05, 1, &a.ptr) == CORRCONC_OK);
    REQUIRE(corrconc_sim_run(m.ptr, 5000, 2023, 0.05, 4, &b.ptr) == CORRCONC_OK);
    corrconc_sim_summary sa{};
    corrconc_sim_summary sb{};
    REQUIRE(corrconc_sim_summary_get(a.ptr, &sa) == CORRCONC_OK);
    REQUIRE(corrconc_sim_summary_get(b.ptr, &sb) == CORRCONC_OK);
    CHECK(std::memcmp(&sa.mean_r, &sb.mean_r, sizeof(double)) == 0);
    CHECK(std::memcmp(&sa.sd_r, &sb.sd_r, sizeof(double)) == 0);
    CHECK(std::memcmp(sa.coverage, sb.coverage, sizeof sa.coverage) == 0);
    CHECK(sa.reps == 5000);
    CHECK(sa.seed == 2023);
    CHECK(sa.coverage[0] >= sa.coverage[1]);
    CHECK(sa.intervals[2].kind == CORRCONC_C2);

    const double* values = nullptr;
    size_t count = 0;
    REQUIRE(corrconc_sim_values(a.ptr, &values, &count) == CORRCONC_OK);
    REQUIRE(count == 5000);
    double rate = 0.0;
    REQUIRE(corrconc_coverage_rate(values, count, &sa.intervals[1], &rate) == CORRCONC_OK);
    CHECK(rate == sa.coverage[1]);

    SimGuard bad;
    CHECK(corrconc_sim_run(m.ptr, 1, 2023, 0.05, 1, &bad.ptr) == CORRCONC_E_DOMAIN);
    CHECK(bad.ptr == nullptr);
}

TEST_CASE("last error is per thread", "[capi]") {
    double out = 0.0;
    REQUIRE(corrconc_kappa(0.1, &out) == CORRCONC_E_DOMAIN);
    std::string other = "unset";
    std::thread([&] { other = corrconc_last_error(); }).join();
    CHECK(other.empty());
    CHECK_FALSE(std::string(corrconc_last_error()).empty());
}
