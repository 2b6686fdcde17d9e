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

// Monte Carlo replication of R under the bivariate Gaussian model, with
// summary statistics and empirical coverage of the C0/C1/C2 intervals.
//
// Determinism contract: replication j draws from CounterStream(seed, j) and
// all reductions run over fixed chunks in chunk order, so a SimSummary is
// bit-identical for any worker count.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "corrconc/conc.hpp"
#include "corrconc/model.hpp"
#include "corrconc/rng.hpp"

namespace corrconc {

struct BivariateSample {
    std::vector<double> x;
    std::vector<double> y;
};

/// n pairs with X ~ N(0, 1) and Y = rho X + sqrt(1 - rho^2) Z.
BivariateSample sample_bivariate(const ModelParams& params, int n, CounterStream& stream);

/// Pearson correlation with squared deviations in the denominator, clamped
/// to [-1, 1]. Throws UndefinedCorrelationError on zero sample variance.
double sample_correlation(std::span<const double> xs, std::span<const double> ys);

/// Fraction of values inside the closed raw interval [lower, upper].
double coverage_rate(std::span<const double> r_values, const Interval& interval);

/// Fraction of values with |r - center| > t.
double exceedance_rate(std::span<const double> r_values, double center, double t);

struct SimConfig {
    ModelParams params{0.0, 10};
    int reps = 10000;
    std::uint64_t seed = 2023;
    double alpha = 0.05;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
    BoundOptions bounds{};
};

struct CoverageCell {
    TailBoundKind kind = TailBoundKind::Conservative;
    Interval interval{};
    double rate = 0.0;
};

struct SimSummary {
    double mean_r = 0.0;
    /// Sample standard deviation, divisor reps - 1.
    double sd_r = 0.0;
    /// Fourth central sample moment; used for the standard error of sd_r^2.
    double m4_r = 0.0;
    std::array<CoverageCell, 3> coverage{};  ///< C0, C1, C2 in that order
    int reps = 0;
    std::uint64_t seed = 0;
    /// Replications redrawn because a sample had zero variance.
    int resampled = 0;

    double coverage_of(TailBoundKind kind) const;
};

struct SimRun {
    SimSummary summary;
    std::vector<double> r_values;  ///< indexed by replication
};

SimRun run_experiment(const SimConfig& cfg);

}  // namespace corrconc
