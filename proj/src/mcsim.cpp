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

#include "corrconc/mcsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace corrconc {
namespace {

constexpr int kChunkSize = 4096;
constexpr int kMaxRedraws = 64;

// Welford accumulator for mean and central moments up to order four.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;

    void push(double x) {
        const double n1 = count;
        count += 1.0;
        const double delta = x - mean;
        const double delta_n = delta / count;
        const double delta_n2 = delta_n * delta_n;
        const double term1 = delta * delta_n * n1;
        mean += delta_n;
        m4 += term1 * delta_n2 * (count * count - 3.0 * count + 3.0) + 6.0 * delta_n2 * m2 -
              4.0 * delta_n * m3;
        m3 += term1 * delta_n * (count - 2.0) - 3.0 * delta_n * m2;
        m2 += term1;
    }

    // Pairwise combination (Chan et al. / Pebay).
    void merge(const Moments& b) {
        if (b.count == 0.0) {
            return;
        }
        if (count == 0.0) {
            *this = b;
            return;
        }
        const double na = count;
        const double nb = b.count;
        const double n = na + nb;
        const double delta = b.mean - mean;
        const double d2 = delta * delta;
        const double d3 = d2 * delta;
        const double d4 = d2 * d2;
        const double m2n = m2 + b.m2 + d2 * na * nb / n;
        const double m3n = m3 + b.m3 + d3 * na * nb * (na - nb) / (n * n) +
                           3.0 * delta * (na * b.m2 - nb * m2) / n;
        const double m4n = m4 + b.m4 + d4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                           6.0 * d2 * (na * na * b.m2 + nb * nb * m2) / (n * n) +
                           4.0 * delta * (na * b.m3 - nb * m3) / n;
        mean += delta * nb / n;
        m2 = m2n;
        m3 = m3n;
        m4 = m4n;
        count = n;
    }
};

struct ChunkResult {
    Moments moments;
    int resampled = 0;
};

double draw_correlation(const ModelParams& params, std::uint64_t seed, std::uint64_t rep,
                        int& redraws) {
    CounterStream stream(seed, rep);
    for (int attempt = 0;; ++attempt) {
        CounterStream s = attempt == 0 ? stream : stream.split(static_cast<std::uint64_t>(attempt));
        const BivariateSample sample = sample_bivariate(params, params.n(), s);
        try {
            return sample_correlation(sample.x, sample.y);
        } catch (const UndefinedCorrelationError&) {
            if (attempt + 1 >= kMaxRedraws) {
                throw;
            }
            ++redraws;
        }
    }
}

}  // namespace

BivariateSample sample_bivariate(const ModelParams& params, int n, CounterStream& stream) {
    if (n < 3) {
        throw DomainError("sample size must be at least 3");
    }
    const double rho = params.rho();
    const double scale = std::sqrt(params.one_minus_rho2());
    BivariateSample out;
    out.x.resize(static_cast<std::size_t>(n));
    out.y.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = stream.next_normal();
        const double z = stream.next_normal();
        out.x[i] = x;
        out.y[i] = scale == 0.0 ? rho * x : rho * x + scale * z;
    }
    return out;
}

double sample_correlation(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw DomainError("correlation inputs must have equal length");
    }
    if (xs.size() < 3) {
        throw DomainError("correlation needs at least 3 pairs");
    }
    const double count = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) {
        throw UndefinedCorrelationError("sample correlation undefined for zero sample variance");
    }
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

double coverage_rate(std::span<const double> r_values, const Interval& interval) {
    if (r_values.empty()) {
        throw DomainError("coverage rate of an empty sample");
    }
    const auto inside = std::count_if(r_values.begin(), r_values.end(),
                                      [&](double r) { return interval.contains(r); });
    return static_cast<double>(inside) / static_cast<double>(r_values.size());
}

double exceedance_rate(std::span<const double> r_values, double center, double t) {
    if (r_values.empty()) {
        throw DomainError("exceedance rate of an empty sample");
    }
    const auto outside = std::count_if(r_values.begin(), r_values.end(),
                                       [&](double r) { return std::fabs(r - center) > t; });
    return static_cast<double>(outside) / static_cast<double>(r_values.size());
}

double SimSummary::coverage_of(TailBoundKind kind) const {
    for (const auto& cell : coverage) {
        if (cell.kind == kind) {
            return cell.rate;
        }
    }
    throw DomainError("coverage is only tracked for the sub-Gaussian intervals");
}

SimRun run_experiment(const SimConfig& cfg) {
    if (cfg.reps < 2) {
        throw DomainError("simulation needs at least 2 replications");
    }
    const int chunks = (cfg.reps + kChunkSize - 1) / kChunkSize;
    std::vector<double> values(static_cast<std::size_t>(cfg.reps));
    std::vector<ChunkResult> partial(static_cast<std::size_t>(chunks));

    std::atomic<int> next_chunk{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto run_chunks = [&]() {
        for (int c = next_chunk++; c < chunks; c = next_chunk++) {
            ChunkResult& out = partial[static_cast<std::size_t>(c)];
            const int begin = c * kChunkSize;
            const int end = std::min(cfg.reps, begin + kChunkSize);
            for (int j = begin; j < end; ++j) {
                const double r = draw_correlation(cfg.params, cfg.seed,
                                                  static_cast<std::uint64_t>(j), out.resampled);
                values[static_cast<std::size_t>(j)] = r;
                out.moments.push(r);
            }
        }
    };

    auto work = [&]() {
        try {
            run_chunks();
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next_chunk = chunks;
        }
    };
    unsigned workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(chunks));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    Moments total;
    int resampled = 0;
    for (const auto& chunk : partial) {
        total.merge(chunk.moments);
        resampled += chunk.resampled;
    }

    SimRun run;
    run.summary.reps = cfg.reps;
    run.summary.seed = cfg.seed;
    run.summary.resampled = resampled;
    run.summary.mean_r = total.mean;
    run.summary.sd_r = std::sqrt(std::max(0.0, total.m2) / (total.count - 1.0));
    run.summary.m4_r = total.m4 / total.count;
    for (std::size_t i = 0; i < std::size(kSubGaussianKinds); ++i) {
        const TailBoundKind kind = kSubGaussianKinds[i];
        CoverageCell cell;
        cell.kind = kind;
        cell.interval = coverage_interval(kind, cfg.params, cfg.alpha, cfg.bounds);
        cell.rate = coverage_rate(values, cell.interval);
        run.summary.coverage[i] = cell;
    }
    run.r_values = std::move(values);
    return run;
}

}  // namespace corrconc
