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

// corrconc command-line front end. Every computation goes through the C API.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corrconc/corrconc.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kNumeric = 3, kInfeasible = 4 };

// A failed C API call, carrying the status for exit-code mapping.
struct ApiFailure : std::runtime_error {
    corrconc_status status;
    ApiFailure(corrconc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(corrconc_status status) {
    if (status != CORRCONC_OK) {
        throw ApiFailure(status, std::string(corrconc_status_name(status)) + ": " +
                                     corrconc_last_error());
    }
}

int exit_code_for(corrconc_status status) {
    switch (status) {
        case CORRCONC_E_INVALID_ARGUMENT:
        case CORRCONC_E_DOMAIN:
        case CORRCONC_E_DEGENERATE:
            return kUsage;
        case CORRCONC_E_INFEASIBLE:
            return kInfeasible;
        default:
            return kNumeric;
    }
}

class Model {
public:
    Model(double rho, int n) { check(corrconc_model_create(rho, n, &ptr_)); }
    ~Model() { corrconc_model_destroy(ptr_); }
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;
    corrconc_model* get() const { return ptr_; }

private:
    corrconc_model* ptr_ = nullptr;
};

class Simulation {
public:
    Simulation(const Model& m, int reps, std::uint64_t seed, double alpha, unsigned workers) {
        check(corrconc_sim_run(m.get(), reps, seed, alpha, workers, &ptr_));
        check(corrconc_sim_summary_get(ptr_, &summary_));
    }
    ~Simulation() { corrconc_sim_destroy(ptr_); }
    Simulation(const Simulation&) = delete;
    Simulation& operator=(const Simulation&) = delete;
    const corrconc_sim_summary& summary() const { return summary_; }

private:
    corrconc_sim* ptr_ = nullptr;
    corrconc_sim_summary summary_{};
};

// ---------------------------------------------------------------------------
// Tables

struct Missing {};
using Cell = std::variant<double, long long, bool, std::string, Missing>;

struct Column {
    std::string label;  ///< csv / markdown header
    std::string key;    ///< json-lines key
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Markdown, JsonLines };

struct OutputOptions {
    Format format = Format::Csv;
    int precision = 3;
    std::string out;
};

// Fixed-point text, independent of the C locale; "-0.000" prints as "0.000".
std::string fixed(double v, int precision) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[400];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    std::string s(buf, res.ptr);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

std::string text(const Cell& cell, int precision) {
    return std::visit(
        [precision](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return fixed(v, precision);
            } else if constexpr (std::is_same_v<T, long long>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return "NA";
            }
        },
        cell);
}

nlohmann::ordered_json json_value(const Cell& cell, int precision) {
    if (const auto* d = std::get_if<double>(&cell)) {
        if (!std::isfinite(*d)) {
            return nullptr;
        }
        // Round at the requested precision, then emit the shortest form.
        return std::stod(fixed(*d, precision));
    }
    if (const auto* i = std::get_if<long long>(&cell)) {
        return *i;
    }
    if (const auto* b = std::get_if<bool>(&cell)) {
        return *b;
    }
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    return nullptr;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

void render(const Table& table, const OutputOptions& output, std::ostream& os) {
    switch (output.format) {
        case Format::Csv: {
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                os << (c ? "," : "") << csv_field(table.columns[c].label);
            }
            os << '\n';
            for (const auto& row : table.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    os << (c ? "," : "") << csv_field(text(row[c], output.precision));
                }
                os << '\n';
            }
            break;
        }
        case Format::Markdown: {
            os << '|';
            for (const auto& col : table.columns) {
                os << ' ' << col.label << " |";
            }
            os << "\n|";
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                os << " ---: |";
            }
            os << '\n';
            for (const auto& row : table.rows) {
                os << '|';
                for (const auto& cell : row) {
                    os << ' ' << text(cell, output.precision) << " |";
                }
                os << '\n';
            }
            break;
        }
        case Format::JsonLines: {
            for (const auto& row : table.rows) {
                nlohmann::ordered_json obj = nlohmann::ordered_json::object();
                for (std::size_t c = 0; c < row.size(); ++c) {
                    obj[table.columns[c].key] = json_value(row[c], output.precision);
                }
                os << obj.dump() << '\n';
            }
            break;
        }
    }
}

void emit(const Table& table, const OutputOptions& output) {
    if (output.out.empty() || output.out == "-") {
        render(table, output, std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(output.out, std::ios::binary);
    if (!file) {
        throw CLI::ValidationError("--out", "cannot open " + output.out + " for writing");
    }
    render(table, output, file);
}

// ---------------------------------------------------------------------------
// Commands

struct SeriesFlags {
    double tol = 1e-14;
    int max_terms = 100000;
};

struct SimFlags {
    int reps = 10000;
    std::uint64_t seed = 2023;
    double alpha = 0.05;
    unsigned workers = 0;
};

struct BoundFlags {
    std::string size = "n";
    std::string bernstein = "statement";
};

void configure(const Model& m, const SeriesFlags& series, const BoundFlags& bounds) {
    check(corrconc_model_set_series(m.get(), series.tol, series.max_terms));
    check(corrconc_model_set_bound_options(
        m.get(), bounds.size == "n" ? CORRCONC_SIZE_N : CORRCONC_SIZE_N_MINUS_1,
        bounds.bernstein == "statement" ? CORRCONC_BERNSTEIN_STATEMENT
                                        : CORRCONC_BERNSTEIN_PROOF));
}

const std::vector<double> kPaperRhos = {0.0, -0.25, 0.56, -0.75, 0.95};

constexpr corrconc_bound_kind kSubGaussian[] = {CORRCONC_C0, CORRCONC_C1, CORRCONC_C2};

const char* kind_label(corrconc_bound_kind kind) {
    switch (kind) {
        case CORRCONC_BERNSTEIN:
            return "bernstein";
        case CORRCONC_C0:
            return "c0";
        case CORRCONC_C1:
            return "c1";
        case CORRCONC_C2:
            return "c2";
    }
    return "?";
}

Table cmd_moments(double rho, int n, int m_max, const SeriesFlags& series) {
    Model model(rho, n);
    configure(model, series, {});
    Table t{{{"m", "m"},
             {"series", "series"},
             {"quadrature", "quadrature"},
             {"terms_used", "terms_used"},
             {"truncation_estimate", "truncation_estimate"}},
            {}};
    const bool degenerate = std::fabs(rho) == 1.0;
    for (int m = 0; m <= m_max; ++m) {
        corrconc_moment mom{};
        check(corrconc_moment_series(model.get(), m, &mom));
        Cell quad = Missing{};
        if (!degenerate) {
            double q = 0.0;
            check(corrconc_moment_quadrature(model.get(), m, &q));
            quad = q;
        }
        t.rows.push_back({static_cast<long long>(m), mom.value, quad,
                          static_cast<long long>(mom.terms_used), mom.truncation_estimate});
    }
    return t;
}

Table cmd_table1(int n, const std::vector<double>& rhos, const SimFlags& sim,
                 const SeriesFlags& series, bool with_exact) {
    Table t{{{"rho", "rho"},
             {"E(R)", "E_R"},
             {"mean_r", "mean_r"},
             {"sd(R)", "sd_R"},
             {"sd_r", "sd_r"},
             {"UB", "UB"}},
            {}};
    if (with_exact) {
        t.columns.push_back({"exact_E(R)", "exact_E_R"});
        t.columns.push_back({"exact_sd(R)", "exact_sd_R"});
    }
    for (double rho : rhos) {
        Model model(rho, n);
        configure(model, series, {});
        double mean = 0.0;
        double var = 0.0;
        corrconc_var_bounds vb{};
        check(corrconc_mean_approx(model.get(), &mean));
        check(corrconc_var_approx(model.get(), &var));
        check(corrconc_variance_bounds(model.get(), &vb));
        const Simulation run(model, sim.reps, sim.seed, sim.alpha, sim.workers);
        std::vector<Cell> row = {rho,
                                 mean,
                                 run.summary().mean_r,
                                 std::sqrt(var),
                                 run.summary().sd_r,
                                 std::sqrt(vb.upper_conservative)};
        if (with_exact) {
            corrconc_moment m1{};
            double v = 0.0;
            check(corrconc_moment_series(model.get(), 1, &m1));
            check(corrconc_exact_variance(model.get(), &v));
            row.push_back(m1.value);
            row.push_back(std::sqrt(std::fmax(0.0, v)));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_coverage(int n, const std::vector<double>& rhos, const SimFlags& sim,
                   const BoundFlags& bounds) {
    Table t{{{"rho", "rho"}, {"n", "n"}}, {}};
    for (auto kind : kSubGaussian) {
        const std::string k = kind_label(kind);
        const std::string up = "C" + k.substr(1);
        t.columns.push_back({up + " %", k + "_pct"});
    }
    for (auto kind : kSubGaussian) {
        const std::string k = kind_label(kind);
        t.columns.push_back({k + "_lower", k + "_lower"});
        t.columns.push_back({k + "_upper", k + "_upper"});
        t.columns.push_back({k + "_clipped", k + "_clipped"});
    }
    for (double rho : rhos) {
        Model model(rho, n);
        configure(model, {}, bounds);
        const Simulation run(model, sim.reps, sim.seed, sim.alpha, sim.workers);
        const auto& s = run.summary();
        std::vector<Cell> row = {rho, static_cast<long long>(n)};
        for (int i = 0; i < 3; ++i) {
            row.emplace_back(100.0 * s.coverage[i]);
        }
        for (int i = 0; i < 3; ++i) {
            row.emplace_back(s.intervals[i].lower);
            row.emplace_back(s.intervals[i].upper);
            row.emplace_back(s.intervals[i].clipped != 0);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_bounds(double rho, int n, std::optional<double> t_value, std::optional<double> alpha,
                 const std::vector<corrconc_bound_kind>& kinds, const BoundFlags& bounds) {
    Model model(rho, n);
    configure(model, {}, bounds);
    if (t_value) {
        Table t{{{"kind", "kind"},
                 {"t", "t"},
                 {"raw", "raw"},
                 {"clamped", "clamped"},
                 {"degenerate", "degenerate"}},
                {}};
        for (auto kind : kinds) {
            corrconc_tail tail{};
            check(corrconc_tail_bound(model.get(), kind, *t_value, &tail));
            t.rows.push_back({std::string(kind_label(kind)), *t_value, tail.raw, tail.clamped,
                              tail.degenerate != 0});
        }
        return t;
    }
    Table t{{{"kind", "kind"},
             {"alpha", "alpha"},
             {"t", "t"},
             {"lower", "lower"},
             {"upper", "upper"},
             {"clipped", "clipped"}},
            {}};
    for (auto kind : kinds) {
        corrconc_interval iv{};
        check(corrconc_coverage_interval(model.get(), kind, *alpha, &iv));
        t.rows.push_back({std::string(kind_label(kind)), *alpha, iv.half_width, iv.lower, iv.upper,
                          iv.clipped != 0});
    }
    return t;
}

Table cmd_density(double rho, int n, std::vector<double> rs, int grid, const SeriesFlags& series) {
    Model model(rho, n);
    configure(model, series, {});
    if (rs.empty()) {
        for (int i = 0; i <= grid; ++i) {
            rs.push_back(-1.0 + 2.0 * i / grid);
        }
    }
    Table t{{{"r", "r"}, {"density", "density"}}, {}};
    for (double r : rs) {
        double f = 0.0;
        check(corrconc_density(model.get(), r, &f));
        t.rows.push_back({r, f});
    }
    return t;
}

// CLI11 validator for the open unit interval.
const auto kOpenUnit = CLI::Validator(
    [](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0 && v < 1.0)) {
            return "value must lie strictly between 0 and 1";
        }
        return {};
    },
    "(0,1)");

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact moments, concentration bounds and coverage simulation for the "
                 "sample correlation coefficient of bivariate Gaussian data."};
    app.set_version_flag("--version", std::string(corrconc_version()));
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions out;
    SeriesFlags series;
    std::string format = "csv";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "markdown", "jsonl"}))
        ->capture_default_str();
    app.add_option("--precision", out.precision, "Decimal places")
        ->check(CLI::Range(1, 15))
        ->capture_default_str();
    app.add_option("--out", out.out, "Write to PATH instead of standard output");
    app.add_option("--tol", series.tol, "Series relative tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-terms", series.max_terms, "Series term cap")
        ->check(CLI::Range(1, 100000000))
        ->capture_default_str();

    const auto rho_check = CLI::Range(-1.0, 1.0);
    const auto n_check = CLI::Range(3, 1000000);

    SimFlags sim;
    BoundFlags bounds;
    auto add_sim = [&](CLI::App* cmd) {
        cmd->add_option("--reps", sim.reps, "Monte Carlo replications")
            ->check(CLI::Range(2, 100000000))
            ->capture_default_str();
        cmd->add_option("--seed", sim.seed, "Random seed")
            ->envname("CORRCONC_SEED")
            ->capture_default_str();
        cmd->add_option("--workers", sim.workers, "Worker threads (0 = all cores)")
            ->capture_default_str();
    };
    auto add_bound_flags = [&](CLI::App* cmd) {
        cmd->add_option("--size-convention", bounds.size,
                        "Sample size in the bounds: n, or n-1 (degrees of freedom)")
            ->check(CLI::IsMember({"n", "n-1"}))
            ->capture_default_str();
        cmd->add_option("--bernstein-form", bounds.bernstein, "Bernstein bound variant")
            ->check(CLI::IsMember({"statement", "proof"}))
            ->capture_default_str();
    };

    double rho = 0.0;
    int n = 10;
    int m_max = 4;
    auto* moments = app.add_subcommand("moments", "Exact moments E(R^m), series and quadrature");
    moments->add_option("--rho", rho)->check(rho_check)->capture_default_str();
    moments->add_option("--n", n)->check(n_check)->capture_default_str();
    moments->add_option("--m-max", m_max, "Highest moment order")
        ->check(CLI::Range(0, 200))
        ->capture_default_str();

    std::vector<double> rhos = kPaperRhos;
    bool with_exact = false;
    auto* table1 = app.add_subcommand("table1", "Closed forms against simulation");
    table1->add_option("--rho", rhos, "Correlations")
        ->delimiter(',')
        ->check(rho_check)
        ->capture_default_str();
    table1->add_option("--n", n)->check(n_check)->capture_default_str();
    table1->add_flag("--exact", with_exact, "Append exact mean and sd columns");
    add_sim(table1);

    auto* coverage = app.add_subcommand("coverage", "Empirical coverage of C0, C1, C2");
    coverage->add_option("--rho", rhos, "Correlations")
        ->delimiter(',')
        ->check(CLI::Range(-1.0, 1.0))
        ->capture_default_str();
    coverage->add_option("--n", n)->check(n_check)->capture_default_str();
    coverage->add_option("--alpha", sim.alpha)->check(kOpenUnit)->capture_default_str();
    add_sim(coverage);
    add_bound_flags(coverage);

    std::optional<double> t_value;
    std::optional<double> alpha;
    std::vector<std::string> kind_names;
    auto* bounds_cmd = app.add_subcommand("bounds", "Tail bounds at t, or intervals at alpha");
    bounds_cmd->add_option("--rho", rho)->check(rho_check)->capture_default_str();
    bounds_cmd->add_option("--n", n)->check(n_check)->capture_default_str();
    auto* t_opt = bounds_cmd->add_option("--t", t_value, "Deviation t > 0")
                      ->check(CLI::PositiveNumber);
    // Any positive alpha is accepted here so that unreachable levels (>= 2)
    // surface as infeasible rather than as a usage error.
    auto* a_opt =
        bounds_cmd->add_option("--alpha", alpha, "Level alpha")->check(CLI::PositiveNumber);
    t_opt->excludes(a_opt);
    bounds_cmd->add_option("--kind", kind_names, "bernstein, c0, c1, c2 (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember({"bernstein", "c0", "c1", "c2"}));
    add_bound_flags(bounds_cmd);

    std::vector<double> rs;
    int grid = 20;
    auto* density = app.add_subcommand("density", "Exact density of R");
    density->add_option("--rho", rho)->check(rho_check)->capture_default_str();
    density->add_option("--n", n)->check(n_check)->capture_default_str();
    density->add_option("--r", rs, "Evaluation points")->delimiter(',')->check(rho_check);
    density->add_option("--grid", grid, "Equally spaced points on [-1, 1] when --r is absent")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (bounds_cmd->parsed() && !t_value && !alpha) {
            throw CLI::RequiredError("--t or --alpha");
        }
        out.format = format == "csv"        ? Format::Csv
                     : format == "markdown" ? Format::Markdown
                                            : Format::JsonLines;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Table table;
        if (moments->parsed()) {
            table = cmd_moments(rho, n, m_max, series);
        } else if (table1->parsed()) {
            table = cmd_table1(n, rhos, sim, series, with_exact);
        } else if (coverage->parsed()) {
            table = cmd_coverage(n, rhos, sim, bounds);
        } else if (bounds_cmd->parsed()) {
            std::vector<corrconc_bound_kind> kinds;
            for (const auto& name : kind_names) {
                kinds.push_back(name == "bernstein" ? CORRCONC_BERNSTEIN
                                : name == "c0"      ? CORRCONC_C0
                                : name == "c1"      ? CORRCONC_C1
                                                    : CORRCONC_C2);
            }
            if (kinds.empty()) {
                kinds = {CORRCONC_BERNSTEIN, CORRCONC_C0, CORRCONC_C1, CORRCONC_C2};
            }
            table = cmd_bounds(rho, n, t_value, alpha, kinds, bounds);
        } else {
            table = cmd_density(rho, n, rs, grid, series);
        }
        emit(table, out);
    } catch (const ApiFailure& e) {
        std::cerr << "corrconc: " << e.what() << '\n';
        return exit_code_for(e.status);
    } catch (const CLI::Error& e) {
        std::cerr << "corrconc: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
