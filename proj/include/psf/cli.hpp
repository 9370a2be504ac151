#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "psf/datasets.hpp"
#include "psf/forecasting.hpp"
#include "psf/io.hpp"

namespace psf::cli {

struct RunSpec {
    std::string input;  // CSV path, or an embedded dataset name
    bool embedded = false;
    std::optional<std::size_t> cycle;  // defaults: 12 for embedded data, 24 otherwise
    std::size_t n_ahead = 0;
    std::vector<int> k_grid = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<int> w_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> output;
    std::optional<std::filesystem::path> plot;
    unsigned threads = 1;
    int repeats = 1;
};

struct EvaluationReport {
    double rmse = 0.0;
    int k = 0;
    std::size_t w = 0;
    std::size_t horizon = 0;
    long long runtime_ms = 0;

    std::string csv_line() const {
        return io::format_double(rmse) + "," + std::to_string(k) + "," + std::to_string(w) + "," +
               std::to_string(horizon) + "," + std::to_string(runtime_ms);
    }
};

/// Accepts "7" or "2..10" (inclusive).
inline std::vector<int> parse_grid(const std::string& text) {
    auto to_int = [&](std::string_view s) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw Error("invalid grid '" + text + "': expected <int> or <lo>..<hi>");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        return {to_int(text)};
    }
    const int lo = to_int(std::string_view(text).substr(0, dots));
    const int hi = to_int(std::string_view(text).substr(dots + 2));
    if (lo > hi) {
        throw Error("invalid grid '" + text + "': empty range");
    }
    std::vector<int> grid;
    for (int v = lo; v <= hi; ++v) {
        grid.push_back(v);
    }
    return grid;
}

inline std::optional<std::span<const double>> embedded_dataset(const std::string& name) {
    if (name == "nottem") {
        return std::span<const double>(datasets::nottem);
    }
    if (name == "sunspots") {
        return std::span<const double>(datasets::sunspots);
    }
    return std::nullopt;
}

inline std::size_t resolved_cycle(const RunSpec& spec) {
    return spec.cycle.value_or(spec.embedded ? 12 : 24);
}

inline TimeSeries load_series(const RunSpec& spec) {
    const std::size_t cycle = resolved_cycle(spec);
    if (spec.embedded) {
        const auto data = embedded_dataset(spec.input);
        if (!data) {
            throw Error("unknown dataset '" + spec.input + "' (available: nottem, sunspots)");
        }
        return TimeSeries(std::vector<double>(data->begin(), data->end()), cycle);
    }
    return io::ingest_csv(spec.input, cycle);
}

inline PsfConfig make_config(const RunSpec& spec, std::uint64_t seed) {
    PsfConfig config;
    config.k_grid = spec.k_grid;
    config.w_grid = spec.w_grid;
    config.cycle = resolved_cycle(spec);
    config.n_ahead = spec.n_ahead;
    config.seed = seed;
    config.threads = spec.threads;
    return config;
}

inline void report_warnings(const Warnings& warnings, std::ostream& err) {
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
}

/// Forecasts n_ahead values past the end of the input. Predictions go to
/// --out (or stdout after the k/w line when no path is given).
inline int cmd_forecast(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        const auto series = load_series(spec);
        const auto result = psf(series, make_config(spec, spec.seed));
        report_warnings(result.diagnostics.warnings, err);
        const auto text = io::format_lines(result.predictions);
        std::string svg;
        if (spec.plot) {
            svg = io::render_plot(align_to_cycles(series.values(), series.cycle()), result.predictions);
        }
        if (spec.output) {
            io::write_atomic(*spec.output, text);
        }
        if (spec.plot) {
            io::write_atomic(*spec.plot, svg);
        }
        out << "k=" << result.k << " w=" << result.w << '\n';
        if (!spec.output) {
            out << text;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

/// Same as forecast but --plot is mandatory.
inline int cmd_plot(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    if (!spec.plot) {
        err << "error: plot requires --plot <path>\n";
        return 1;
    }
    return cmd_forecast(spec, out, err);
}

/// Holds out the final whole cycles covering n_ahead values, forecasts them
/// from the remainder and scores the forecast. With repeats > 1 the seeds
/// seed, seed+1, ... are run and the mean RMSE is reported; k and w come
/// from the first run.
inline EvaluationReport evaluate(const RunSpec& spec, Warnings* warnings = nullptr) {
    const auto start = std::chrono::steady_clock::now();
    const auto series = load_series(spec);
    const auto aligned = align_to_cycles(series.values(), series.cycle(), warnings);
    const std::size_t holdout = cycles_for(spec.n_ahead, series.cycle()) * series.cycle();
    if (aligned.size() < holdout + 2 * series.cycle()) {
        throw Error("insufficient data: evaluation needs " + std::to_string(holdout) +
                    " holdout values plus two training cycles");
    }
    const TimeSeries training(std::vector<double>(aligned.begin(), aligned.end() - static_cast<std::ptrdiff_t>(holdout)),
                              series.cycle());
    const auto test = aligned.last(holdout);

    EvaluationReport report;
    report.horizon = holdout;
    double total = 0.0;
    const int repeats = std::max(1, spec.repeats);
    for (int r = 0; r < repeats; ++r) {
        auto config = make_config(spec, spec.seed + static_cast<std::uint64_t>(r));
        config.n_ahead = holdout;
        const auto result = psf(training, config);
        if (r == 0) {
            report.k = result.k;
            report.w = result.w;
            if (warnings != nullptr) {
                warnings->insert(warnings->end(), result.diagnostics.warnings.begin(),
                                 result.diagnostics.warnings.end());
            }
        }
        total += rmse(result.predictions, test);
    }
    report.rmse = total / repeats;
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

inline int cmd_evaluate(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        Warnings warnings;
        const auto report = evaluate(spec, &warnings);
        report_warnings(warnings, err);
        err << "seed=" << spec.seed << " repeats=" << std::max(1, spec.repeats) << '\n';
        const auto line = report.csv_line() + "\n";
        if (spec.output) {
            io::write_atomic(*spec.output, line);
        }
        out << line;
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace psf::cli
