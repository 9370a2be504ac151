#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace psf {

/// Raised for every contract violation in the library (bad input, infeasible
/// configuration). Messages are meant to be shown to the end user as-is.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Collects non-fatal conditions (truncated input, skipped grid values).
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string message) {
    if (sink != nullptr) {
        sink->push_back(std::move(message));
    }
}

inline void require_finite(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error("non-finite value at index " + std::to_string(i));
        }
    }
}

/**
 * Univariate series with a seasonal cycle length.
 *
 * Invariants: all values finite, cycle >= 1, size() >= 2 * cycle.
 */
class TimeSeries {
public:
    TimeSeries(std::vector<double> values, std::size_t cycle)
        : values_(std::move(values)), cycle_(cycle) {
        if (cycle_ == 0) {
            throw Error("cycle must be positive");
        }
        if (values_.empty()) {
            throw Error("empty input");
        }
        require_finite(values_);
        if (values_.size() < 2 * cycle_) {
            throw Error("insufficient data: " + std::to_string(values_.size()) +
                        " values, need at least " + std::to_string(2 * cycle_));
        }
    }

    std::span<const double> values() const { return values_; }
    std::size_t cycle() const { return cycle_; }
    std::size_t size() const { return values_.size(); }
    std::size_t whole_cycles() const { return values_.size() / cycle_; }

private:
    std::vector<double> values_;
    std::size_t cycle_;
};

struct ScalingParams {
    double min = 0.0;
    double max = 0.0;

    double range() const { return max - min; }
};

struct Normalized {
    std::vector<double> values;
    ScalingParams params;
};

/// Unity-based feature scaling into [0, 1]. A constant input maps to all zeros.
inline Normalized normalize(std::span<const double> values) {
    if (values.empty()) {
        throw Error("empty input");
    }
    require_finite(values);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    Normalized out{{}, {*lo, *hi}};
    out.values.reserve(values.size());
    const double range = out.params.range();
    for (double v : values) {
        out.values.push_back(range > 0.0 ? (v - out.params.min) / range : 0.0);
    }
    return out;
}

inline Normalized normalize(const TimeSeries& series) { return normalize(series.values()); }

inline std::vector<double> denormalize(std::span<const double> values, const ScalingParams& params) {
    require_finite(values);
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) {
        out.push_back(v * params.range() + params.min);
    }
    return out;
}

/**
 * A series laid out as consecutive rows of `cycle` values (row-major).
 */
class CycleMatrix {
public:
    explicit CycleMatrix(std::size_t cycle) : cycle_(cycle) {
        if (cycle_ == 0) {
            throw Error("cycle must be positive");
        }
    }

    CycleMatrix(std::vector<double> flat, std::size_t cycle) : data_(std::move(flat)), cycle_(cycle) {
        if (cycle_ == 0 || data_.size() % cycle_ != 0) {
            throw Error("matrix data is not a whole number of cycles");
        }
    }

    std::size_t rows() const { return data_.size() / cycle_; }
    std::size_t cycle() const { return cycle_; }

    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(data_).subspan(i * cycle_, cycle_);
    }

    void append_row(std::span<const double> row) {
        if (row.size() != cycle_) {
            throw Error("row length does not match cycle");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }

    std::span<const double> flat() const { return data_; }

private:
    std::vector<double> data_;
    std::size_t cycle_;
};

/// Drops the oldest values so that the remainder is a whole number of cycles.
inline std::span<const double> align_to_cycles(std::span<const double> values, std::size_t cycle,
                                               Warnings* warnings = nullptr) {
    if (cycle == 0) {
        throw Error("cycle must be positive");
    }
    const std::size_t leftover = values.size() % cycle;
    if (leftover != 0) {
        warn(warnings, "series length " + std::to_string(values.size()) + " is not a multiple of cycle " +
                           std::to_string(cycle) + "; dropping the oldest " + std::to_string(leftover) +
                           " values");
    }
    return values.subspan(leftover);
}

inline CycleMatrix reshape_to_cycles(std::span<const double> values, std::size_t cycle,
                                     Warnings* warnings = nullptr) {
    if (cycle == 0) {
        throw Error("cycle must be positive");
    }
    if (values.size() < 2 * cycle) {
        throw Error("insufficient data: " + std::to_string(values.size()) + " values, need at least " +
                    std::to_string(2 * cycle));
    }
    const auto aligned = align_to_cycles(values, cycle, warnings);
    return CycleMatrix(std::vector<double>(aligned.begin(), aligned.end()), cycle);
}

inline CycleMatrix reshape_to_cycles(const TimeSeries& series, Warnings* warnings = nullptr) {
    return reshape_to_cycles(series.values(), series.cycle(), warnings);
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

namespace detail {

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index is
/// processed exactly once; callers write results into per-index slots.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace detail

}  // namespace psf
