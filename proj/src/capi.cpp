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

#include "corrconc/corrconc.h"

#include <exception>
#include <new>
#include <optional>
#include <string>

#include "corrconc/approx.hpp"
#include "corrconc/conc.hpp"
#include "corrconc/exactdist.hpp"
#include "corrconc/gammakit.hpp"
#include "corrconc/mcsim.hpp"

struct corrconc_model {
    corrconc::ModelParams params;
    corrconc::SeriesConfig series;
    corrconc::BoundOptions bounds;
};

struct corrconc_sim {
    corrconc::SimRun run;
};

namespace {

thread_local std::string last_error;

corrconc_status fail(corrconc_status status, const char* message) {
    last_error = message;
    return status;
}

// Runs `body`, translating library exceptions into status codes.
template <class Body>
corrconc_status guarded(Body&& body) noexcept {
    try {
        body();
        last_error.clear();
        return CORRCONC_OK;
    } catch (const corrconc::DomainError& e) {
        return fail(CORRCONC_E_DOMAIN, e.what());
    } catch (const corrconc::DegenerateError& e) {
        return fail(CORRCONC_E_DEGENERATE, e.what());
    } catch (const corrconc::TruncationError& e) {
        return fail(CORRCONC_E_TRUNCATION, e.what());
    } catch (const corrconc::QuadratureError& e) {
        return fail(CORRCONC_E_QUADRATURE, e.what());
    } catch (const corrconc::InfeasibleError& e) {
        return fail(CORRCONC_E_INFEASIBLE, e.what());
    } catch (const corrconc::UndefinedCorrelationError& e) {
        return fail(CORRCONC_E_UNDEFINED, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CORRCONC_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CORRCONC_E_INTERNAL, e.what());
    } catch (...) {
        return fail(CORRCONC_E_INTERNAL, "unknown error");
    }
}

std::optional<corrconc::TailBoundKind> to_kind(corrconc_bound_kind kind) {
    switch (kind) {
        case CORRCONC_BERNSTEIN:
            return corrconc::TailBoundKind::Bernstein;
        case CORRCONC_C0:
            return corrconc::TailBoundKind::Conservative;
        case CORRCONC_C1:
            return corrconc::TailBoundKind::Aggressive;
        case CORRCONC_C2:
            return corrconc::TailBoundKind::MegaAggressive;
    }
    return std::nullopt;
}

corrconc_bound_kind from_kind(corrconc::TailBoundKind kind) {
    switch (kind) {
        case corrconc::TailBoundKind::Bernstein:
            return CORRCONC_BERNSTEIN;
        case corrconc::TailBoundKind::Conservative:
            return CORRCONC_C0;
        case corrconc::TailBoundKind::Aggressive:
            return CORRCONC_C1;
        case corrconc::TailBoundKind::MegaAggressive:
            break;
    }
    return CORRCONC_C2;
}

corrconc_interval to_c(const corrconc::Interval& iv) {
    return corrconc_interval{iv.lower,  iv.upper,           iv.half_width, iv.alpha,
                             iv.level(), from_kind(iv.kind), iv.clipped ? 1 : 0};
}

corrconc::Interval from_c(const corrconc_interval& iv) {
    corrconc::Interval out;
    out.lower = iv.lower;
    out.upper = iv.upper;
    out.half_width = iv.half_width;
    out.alpha = iv.alpha;
    out.kind = to_kind(iv.kind).value_or(corrconc::TailBoundKind::Conservative);
    out.clipped = iv.clipped != 0;
    return out;
}

#define CORRCONC_REQUIRE(cond)                                                 \
    do {                                                                       \
        if (!(cond)) {                                                         \
            return fail(CORRCONC_E_INVALID_ARGUMENT, "invalid argument: " #cond); \
        }                                                                      \
    } while (0)

// Scalar query on a model handle.
template <class Fn>
corrconc_status model_scalar(const corrconc_model* model, double* out, Fn&& fn) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] { *out = fn(*model); });
}

}  // namespace

extern "C" {

const char* corrconc_version(void) { return "1.0.0"; }

const char* corrconc_status_name(corrconc_status status) {
    switch (status) {
        case CORRCONC_OK:
            return "ok";
        case CORRCONC_E_INVALID_ARGUMENT:
            return "invalid argument";
        case CORRCONC_E_DOMAIN:
            return "domain error";
        case CORRCONC_E_DEGENERATE:
            return "degenerate distribution";
        case CORRCONC_E_TRUNCATION:
            return "series truncation";
        case CORRCONC_E_QUADRATURE:
            return "quadrature failure";
        case CORRCONC_E_INFEASIBLE:
            return "infeasible";
        case CORRCONC_E_UNDEFINED:
            return "undefined correlation";
        case CORRCONC_E_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char* corrconc_last_error(void) { return last_error.c_str(); }

corrconc_status corrconc_model_create(double rho, int n, corrconc_model** out) {
    CORRCONC_REQUIRE(out != nullptr);
    *out = nullptr;
    return guarded([&] { *out = new corrconc_model{corrconc::ModelParams(rho, n), {}, {}}; });
}

void corrconc_model_destroy(corrconc_model* model) { delete model; }

corrconc_status corrconc_model_set_series(corrconc_model* model, double rel_tol, int max_terms) {
    CORRCONC_REQUIRE(model != nullptr);
    return guarded([&] {
        const corrconc::SeriesConfig cfg{rel_tol, max_terms};
        cfg.validate();
        model->series = cfg;
    });
}

corrconc_status corrconc_model_set_bound_options(corrconc_model* model,
                                                 corrconc_size_convention size,
                                                 corrconc_bernstein_form form) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(size == CORRCONC_SIZE_N || size == CORRCONC_SIZE_N_MINUS_1);
    CORRCONC_REQUIRE(form == CORRCONC_BERNSTEIN_STATEMENT || form == CORRCONC_BERNSTEIN_PROOF);
    model->bounds.size = size == CORRCONC_SIZE_N ? corrconc::SizeConvention::SampleSize
                                                 : corrconc::SizeConvention::DegreesOfFreedom;
    model->bounds.bernstein = form == CORRCONC_BERNSTEIN_STATEMENT
                                  ? corrconc::BernsteinForm::Statement
                                  : corrconc::BernsteinForm::Proof;
    last_error.clear();
    return CORRCONC_OK;
}

double corrconc_model_rho(const corrconc_model* model) {
    return model != nullptr ? model->params.rho() : 0.0;
}

int corrconc_model_n(const corrconc_model* model) {
    return model != nullptr ? model->params.n() : 0;
}

corrconc_status corrconc_log_gamma(double z, double* out) {
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] { *out = corrconc::log_gamma(z); });
}

corrconc_status corrconc_log_gamma_ratio(double a, double b, double* out) {
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] { *out = corrconc::log_gamma_ratio(a, b); });
}

corrconc_status corrconc_kappa(double z, double* out) {
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] { *out = corrconc::kappa(z); });
}

corrconc_status corrconc_kappa_stirling(double z, double* out) {
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] { *out = corrconc::kappa_stirling(z); });
}

corrconc_status corrconc_density(const corrconc_model* model, double r, double* out) {
    return model_scalar(model, out, [r](const corrconc_model& m) {
        return corrconc::density_at(m.params, r, m.series);
    });
}

corrconc_status corrconc_g_m(int m, int k, int n, double* out) {
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] { *out = corrconc::g_m(m, k, n); });
}

corrconc_status corrconc_moment_series(const corrconc_model* model, int m, corrconc_moment* out) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    try {
        const auto res = corrconc::moment(m, model->params, model->series);
        *out = corrconc_moment{res.value, res.terms_used, res.truncation_estimate};
        last_error.clear();
        return CORRCONC_OK;
    } catch (const corrconc::TruncationError& e) {
        *out = corrconc_moment{e.partial_value(), e.terms_used(), 0.0};
        return fail(CORRCONC_E_TRUNCATION, e.what());
    } catch (...) {
        return guarded([] { throw; });
    }
}

corrconc_status corrconc_moment_quadrature(const corrconc_model* model, int m, double* out) {
    return model_scalar(model, out, [m](const corrconc_model& mo) {
        return corrconc::moment_quadrature(m, mo.params, mo.series);
    });
}

corrconc_status corrconc_exact_variance(const corrconc_model* model, double* out) {
    return model_scalar(model, out, [](const corrconc_model& m) {
        return corrconc::exact_variance(m.params, m.series);
    });
}

corrconc_status corrconc_central_moment(const corrconc_model* model, int order, double center,
                                        double* out) {
    return model_scalar(model, out, [=](const corrconc_model& m) {
        return corrconc::central_moment(order, center, m.params, m.series);
    });
}

corrconc_status corrconc_mean_approx(const corrconc_model* model, double* out) {
    return model_scalar(model, out,
                        [](const corrconc_model& m) { return corrconc::mean_approx(m.params); });
}

corrconc_status corrconc_var_approx(const corrconc_model* model, double* out) {
    return model_scalar(model, out,
                        [](const corrconc_model& m) { return corrconc::var_approx(m.params); });
}

corrconc_status corrconc_second_moment_approx(const corrconc_model* model, double* out) {
    return model_scalar(model, out, [](const corrconc_model& m) {
        return corrconc::second_moment_approx(m.params);
    });
}

corrconc_status corrconc_variance_bounds(const corrconc_model* model,
                                         corrconc_var_bounds* out) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] {
        const auto b = corrconc::variance_bounds(model->params);
        *out = corrconc_var_bounds{b.approx, b.upper_conservative, b.upper_aggressive};
    });
}

corrconc_status corrconc_central_even_moment_bound(const corrconc_model* model, int m,
                                                   double* out) {
    return model_scalar(model, out, [m](const corrconc_model& mo) {
        return corrconc::central_even_moment_bound(m, mo.params);
    });
}

corrconc_status corrconc_tail_bound(const corrconc_model* model, corrconc_bound_kind kind,
                                    double t, corrconc_tail* out) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    const auto k = to_kind(kind);
    CORRCONC_REQUIRE(k.has_value());
    return guarded([&] {
        const auto b = corrconc::tail_bound(*k, model->params, t, model->bounds);
        *out = corrconc_tail{b.raw, b.clamped, b.degenerate ? 1 : 0};
    });
}

corrconc_status corrconc_coverage_interval(const corrconc_model* model, corrconc_bound_kind kind,
                                           double alpha, corrconc_interval* out) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    const auto k = to_kind(kind);
    CORRCONC_REQUIRE(k.has_value());
    return guarded([&] {
        *out = to_c(corrconc::coverage_interval(*k, model->params, alpha, model->bounds));
    });
}

corrconc_status corrconc_invert_tail_numeric(const corrconc_model* model,
                                             corrconc_bound_kind kind, double alpha,
                                             double* out) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    const auto k = to_kind(kind);
    CORRCONC_REQUIRE(k.has_value());
    return guarded(
        [&] { *out = corrconc::invert_tail_numeric(*k, model->params, alpha, model->bounds); });
}

corrconc_status corrconc_semi_telescopic_residual(const corrconc_model* model, int m,
                                                  double* out) {
    return model_scalar(model, out, [m](const corrconc_model& mo) {
        return corrconc::semi_telescopic_residual(m, mo.params, mo.series);
    });
}

corrconc_status corrconc_sim_run(const corrconc_model* model, int reps, uint64_t seed,
                                 double alpha, unsigned workers, corrconc_sim** out) {
    CORRCONC_REQUIRE(model != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    *out = nullptr;
    return guarded([&] {
        corrconc::SimConfig cfg;
        cfg.params = model->params;
        cfg.reps = reps;
        cfg.seed = seed;
        cfg.alpha = alpha;
        cfg.workers = workers;
        cfg.bounds = model->bounds;
        *out = new corrconc_sim{corrconc::run_experiment(cfg)};
    });
}

void corrconc_sim_destroy(corrconc_sim* sim) { delete sim; }

corrconc_status corrconc_sim_summary_get(const corrconc_sim* sim, corrconc_sim_summary* out) {
    CORRCONC_REQUIRE(sim != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    const auto& s = sim->run.summary;
    *out = corrconc_sim_summary{};
    out->mean_r = s.mean_r;
    out->sd_r = s.sd_r;
    out->m4_r = s.m4_r;
    for (std::size_t i = 0; i < s.coverage.size(); ++i) {
        out->coverage[i] = s.coverage[i].rate;
        out->intervals[i] = to_c(s.coverage[i].interval);
    }
    out->reps = s.reps;
    out->seed = s.seed;
    out->resampled = s.resampled;
    last_error.clear();
    return CORRCONC_OK;
}

corrconc_status corrconc_sim_values(const corrconc_sim* sim, const double** values,
                                    size_t* count) {
    CORRCONC_REQUIRE(sim != nullptr);
    CORRCONC_REQUIRE(values != nullptr);
    CORRCONC_REQUIRE(count != nullptr);
    *values = sim->run.r_values.data();
    *count = sim->run.r_values.size();
    last_error.clear();
    return CORRCONC_OK;
}

corrconc_status corrconc_sample_correlation(const double* xs, const double* ys, size_t count,
                                            double* out) {
    CORRCONC_REQUIRE(xs != nullptr);
    CORRCONC_REQUIRE(ys != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = corrconc::sample_correlation(std::span(xs, count), std::span(ys, count));
    });
}

corrconc_status corrconc_coverage_rate(const double* values, size_t count,
                                       const corrconc_interval* interval, double* out) {
    CORRCONC_REQUIRE(values != nullptr || count == 0);
    CORRCONC_REQUIRE(interval != nullptr);
    CORRCONC_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = corrconc::coverage_rate(std::span(values, count), from_c(*interval));
    });
}

}  // extern "C"
