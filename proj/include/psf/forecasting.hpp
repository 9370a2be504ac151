#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "psf/clustering.hpp"
#include "psf/core.hpp"

namespace psf {

/// Successor indices j + 1 for every j where labels[j - w + 1 .. j] equals
/// `window` and a successor row exists (j < size - 1).
inline std::vector<std::size_t> find_pattern_matches(std::span<const int> labels, std::span<const int> window) {
    std::vector<std::size_t> successors;
    const std::size_t w = window.size();
    if (w == 0 || labels.size() < w + 1) {
        return successors;
    }
    for (std::size_t end = w - 1; end + 1 < labels.size(); ++end) {
        if (std::equal(window.begin(), window.end(), labels.begin() + static_cast<std::ptrdiff_t>(end + 1 - w))) {
            successors.push_back(end + 1);
        }
    }
    return successors;
}

struct CyclePrediction {
    std::vector<double> values;           // normalized scale, length cycle
    std::vector<std::size_t> neighbors;   // rows averaged (the ES set)
    std::size_t window_used = 0;          // 0 when no window matched
};

/**
 * Averages the rows that followed earlier occurrences of the trailing
 * `w` labels. The window shrinks one label at a time on a miss; if even a
 * single label never recurs with a successor, all rows are averaged.
 */
inline CyclePrediction predict_next_cycle(const CycleMatrix& matrix, std::span<const int> labels, std::size_t w) {
    if (labels.size() != matrix.rows()) {
        throw Error("label count does not match matrix rows");
    }
    if (w < 1) {
        throw Error("window size must be at least 1");
    }
    if (w >= labels.size()) {
        throw Error("window size " + std::to_string(w) + " needs more than " + std::to_string(labels.size()) +
                    " cycle blocks");
    }

    CyclePrediction out;
    for (std::size_t size = w; size >= 1; --size) {
        out.neighbors = find_pattern_matches(labels, labels.subspan(labels.size() - size));
        if (!out.neighbors.empty()) {
            out.window_used = size;
            break;
        }
    }
    if (out.neighbors.empty()) {
        out.neighbors.resize(matrix.rows());
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            out.neighbors[i] = i;
        }
    }

    out.values.assign(matrix.cycle(), 0.0);
    for (std::size_t idx : out.neighbors) {
        const auto row = matrix.row(idx);
        for (std::size_t d = 0; d < row.size(); ++d) {
            out.values[d] += row[d];
        }
    }
    for (double& v : out.values) {
        v /= static_cast<double>(out.neighbors.size());
    }
    return out;
}

inline double rmse(std::span<const double> predicted, std::span<const double> actual) {
    if (predicted.size() != actual.size()) {
        throw Error("rmse: length mismatch (" + std::to_string(predicted.size()) + " vs " +
                    std::to_string(actual.size()) + ")");
    }
    if (predicted.empty()) {
        throw Error("rmse: empty input");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const double d = predicted[i] - actual[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(predicted.size()));
}

inline std::size_t cycles_for(std::size_t n_ahead, std::size_t cycle) { return (n_ahead + cycle - 1) / cycle; }

/**
 * Closed-loop forecast with fixed k and w.
 *
 * The series is cycle-aligned, normalized and clustered once. Each predicted
 * cycle is appended to the history and labelled with its nearest centroid
 * before the next one is searched for. Returns n_ahead values on the
 * original scale.
 */
inline std::vector<double> psf_predict(std::span<const double> values, std::size_t cycle, int k, std::size_t w,
                                       std::size_t n_ahead, std::uint64_t seed, Warnings* warnings = nullptr,
                                       const KMeansOptions& opts = {}) {
    if (n_ahead < 1) {
        throw Error("n_ahead must be at least 1");
    }
    const auto aligned = align_to_cycles(values, cycle, warnings);
    const auto norm = normalize(aligned);
    auto matrix = reshape_to_cycles(norm.values, cycle);
    const auto clustering = kmeans(matrix, k, seed, opts);
    std::vector<int> labels = clustering.labels;

    std::vector<double> predicted;
    predicted.reserve(cycles_for(n_ahead, cycle) * cycle);
    for (std::size_t step = 0; step < cycles_for(n_ahead, cycle); ++step) {
        const auto next = predict_next_cycle(matrix, labels, w);
        predicted.insert(predicted.end(), next.values.begin(), next.values.end());
        matrix.append_row(next.values);
        labels.push_back(clustering.nearest(next.values));
    }
    predicted.resize(n_ahead);
    return denormalize(predicted, norm.params);
}

inline std::vector<double> psf_predict(const TimeSeries& series, int k, std::size_t w, std::size_t n_ahead,
                                       std::uint64_t seed, Warnings* warnings = nullptr) {
    return psf_predict(series.values(), series.cycle(), k, w, n_ahead, seed, warnings);
}

struct WSelection {
    std::size_t w = 0;
    std::vector<std::pair<std::size_t, double>> scores;  // (w, holdout RMSE) per evaluated w
};

/**
 * Holdout selection of the window size. The last ceil(n_ahead / cycle)
 * whole cycles are predicted from the rest for every candidate; the lowest
 * RMSE (original scale) wins and ties go to the larger window.
 */
inline WSelection optimum_w(std::span<const double> values, std::size_t cycle, int k, std::span<const int> w_grid,
                            std::size_t n_ahead, std::uint64_t seed, Warnings* warnings = nullptr,
                            unsigned threads = 1, const KMeansOptions& opts = {}) {
    const auto aligned = align_to_cycles(values, cycle, warnings);
    const std::size_t holdout = cycles_for(n_ahead, cycle) * cycle;
    if (aligned.size() < holdout + 2 * cycle) {
        throw Error("insufficient data for window selection: " + std::to_string(aligned.size()) +
                    " values, holdout needs " + std::to_string(holdout) + " plus two training cycles");
    }
    const auto training = aligned.first(aligned.size() - holdout);
    const auto validation = aligned.last(holdout);
    const std::size_t training_cycles = training.size() / cycle;
    if (static_cast<std::size_t>(k) > training_cycles) {
        throw Error("k=" + std::to_string(k) + " exceeds the " + std::to_string(training_cycles) +
                    " training cycles left after the holdout");
    }

    std::set<std::size_t> ordered;
    for (int w : w_grid) {
        if (w < 1 || static_cast<std::size_t>(w) >= training_cycles) {
            warn(warnings, "skipping w=" + std::to_string(w) + ": needs 1 <= w < " +
                               std::to_string(training_cycles) + " training cycles");
        } else {
            ordered.insert(static_cast<std::size_t>(w));
        }
    }
    if (ordered.empty()) {
        throw Error("no feasible value in the w grid");
    }
    const std::vector<std::size_t> ws(ordered.begin(), ordered.end());
    std::vector<double> errors(ws.size());
    detail::parallel_for(ws.size(), threads, [&](std::size_t i) {
        errors[i] = rmse(psf_predict(training, cycle, k, ws[i], holdout, seed, nullptr, opts), validation);
    });

    WSelection out;
    std::size_t best = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        out.scores.emplace_back(ws[i], errors[i]);
        if (errors[i] <= errors[best]) {
            best = i;
        }
    }
    out.w = ws[best];
    return out;
}

struct PsfConfig {
    std::vector<int> k_grid = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<int> w_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::size_t cycle = 24;
    std::size_t n_ahead = 1;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    KMeansOptions kmeans;
};

struct PsfDiagnostics {
    bool k_searched = false;
    bool w_searched = false;
    std::vector<std::pair<int, double>> silhouette_by_k;
    std::vector<std::pair<std::size_t, double>> rmse_by_w;
    Warnings warnings;
};

struct PsfResult {
    std::vector<double> predictions;
    int k = 0;
    std::size_t w = 0;
    PsfDiagnostics diagnostics;
};

/// Full pipeline: select k (silhouette) and w (holdout RMSE) unless pinned by
/// a single-value grid, then forecast n_ahead values.
inline PsfResult psf(const TimeSeries& series, const PsfConfig& config) {
    if (config.k_grid.empty() || config.w_grid.empty()) {
        throw Error("k and w grids must be non-empty");
    }
    if (config.n_ahead < 1) {
        throw Error("n_ahead must be at least 1");
    }
    if (series.cycle() != config.cycle) {
        throw Error("series cycle " + std::to_string(series.cycle()) + " does not match configured cycle " +
                    std::to_string(config.cycle));
    }

    PsfResult result;
    auto& diag = result.diagnostics;
    const auto aligned = align_to_cycles(series.values(), series.cycle(), &diag.warnings);

    const std::set<int> k_set(config.k_grid.begin(), config.k_grid.end());
    if (k_set.size() == 1) {
        result.k = *k_set.begin();
    } else {
        const auto norm = normalize(aligned);
        const auto matrix = reshape_to_cycles(norm.values, series.cycle());
        const std::vector<int> ks(k_set.begin(), k_set.end());
        auto sel = optimum_k(matrix, ks, config.seed, &diag.warnings, config.threads, config.kmeans);
        result.k = sel.k;
        diag.k_searched = true;
        diag.silhouette_by_k = std::move(sel.scores);
    }

    const std::set<int> w_set(config.w_grid.begin(), config.w_grid.end());
    if (w_set.size() == 1) {
        const int w = *w_set.begin();
        if (w < 1) {
            throw Error("window size must be at least 1");
        }
        result.w = static_cast<std::size_t>(w);
    } else {
        const std::vector<int> ws(w_set.begin(), w_set.end());
        auto sel = optimum_w(aligned, series.cycle(), result.k, ws, config.n_ahead, config.seed, &diag.warnings,
                             config.threads, config.kmeans);
        result.w = sel.w;
        diag.w_searched = true;
        diag.rmse_by_w = std::move(sel.scores);
    }

    result.predictions =
        psf_predict(aligned, series.cycle(), result.k, result.w, config.n_ahead, config.seed, nullptr, config.kmeans);
    return result;
}

}  // namespace psf
