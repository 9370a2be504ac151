#pragma once

// Reference implementations used only by the tests. Each one takes the
// slow, direct route so it shares no code path with the library.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<double>>;

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

/// Textbook silhouette width, evaluated one point at a time.
inline double silhouette(const Rows& rows, const std::vector<int>& labels) {
    std::map<int, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        members[labels[i]].push_back(i);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& own = members[labels[i]];
        if (own.size() == 1) {
            continue;
        }
        double a = 0.0;
        for (std::size_t j : own) {
            if (j != i) {
                a += euclid(rows[i], rows[j]);
            }
        }
        a /= static_cast<double>(own.size() - 1);
        double b = std::numeric_limits<double>::infinity();
        for (const auto& [label, idx] : members) {
            if (label == labels[i]) {
                continue;
            }
            double d = 0.0;
            for (std::size_t j : idx) {
                d += euclid(rows[i], rows[j]);
            }
            b = std::min(b, d / static_cast<double>(idx.size()));
        }
        if (std::max(a, b) > 0.0) {
            total += (b - a) / std::max(a, b);
        }
    }
    return total / static_cast<double>(rows.size());
}

inline double wcss(const Rows& rows, const std::vector<int>& labels, int k) {
    double total = 0.0;
    for (int c = 0; c < k; ++c) {
        std::vector<double> mean(rows[0].size(), 0.0);
        int n = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (labels[i] == c) {
                for (std::size_t d = 0; d < mean.size(); ++d) {
                    mean[d] += rows[i][d];
                }
                ++n;
            }
        }
        if (n == 0) {
            continue;
        }
        for (double& v : mean) {
            v /= n;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (labels[i] == c) {
                const double d = euclid(rows[i], mean);
                total += d * d;
            }
        }
    }
    return total;
}

/// Minimum WCSS over every assignment of rows into two non-empty groups.
inline double best_two_partition_wcss(const Rows& rows) {
    const std::size_t n = rows.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            labels[i] = static_cast<int>((mask >> i) & 1u);
        }
        best = std::min(best, wcss(rows, labels, 2));
    }
    return best;
}

/// Successor indices by comparing every window position element by element.
inline std::vector<std::size_t> naive_matches(const std::vector<int>& labels, std::size_t w) {
    std::vector<std::size_t> out;
    const std::size_t m = labels.size();
    for (std::size_t start = 0; start + w < m; ++start) {
        bool same = true;
        for (std::size_t t = 0; t < w; ++t) {
            if (labels[start + t] != labels[m - w + t]) {
                same = false;
            }
        }
        if (same) {
            out.push_back(start + w);
        }
    }
    return out;
}

struct PeriodicCase {
    std::vector<double> history;
    std::vector<double> continuation;
    std::size_t cycle = 0;
    std::size_t period = 0;
};

/// History of `repeats` full periods plus the next `ahead` values. Distinct
/// blocks are at least `separation` apart in Euclidean distance. With
/// jitter > 0 every block is a shared random shape plus noise in
/// [-jitter, jitter], which keeps blocks close to each other.
inline PeriodicCase periodic_series(std::mt19937_64& gen, std::size_t cycle, std::size_t period, std::size_t repeats,
                                    std::size_t ahead, double separation = 1.0, double jitter = 0.0) {
    std::uniform_real_distribution<double> value(-20.0, 80.0);
    std::uniform_real_distribution<double> noise(-jitter, jitter);
    std::vector<double> shape(cycle);
    for (double& v : shape) {
        v = value(gen);
    }
    Rows blocks;
    while (blocks.size() < period) {
        std::vector<double> b(cycle);
        for (std::size_t d = 0; d < cycle; ++d) {
            b[d] = jitter > 0.0 ? shape[d] + noise(gen) : value(gen);
        }
        bool far = true;
        for (const auto& other : blocks) {
            far = far && euclid(b, other) >= separation;
        }
        if (far) {
            blocks.push_back(std::move(b));
        }
    }
    PeriodicCase out;
    out.cycle = cycle;
    out.period = period;
    const std::size_t total_blocks = period * repeats;
    for (std::size_t i = 0; i < total_blocks; ++i) {
        const auto& b = blocks[i % period];
        out.history.insert(out.history.end(), b.begin(), b.end());
    }
    for (std::size_t i = 0; out.continuation.size() < ahead; ++i) {
        const auto& b = blocks[(total_blocks + i) % period];
        for (std::size_t d = 0; d < cycle && out.continuation.size() < ahead; ++d) {
            out.continuation.push_back(b[d]);
        }
    }
    return out;
}

}  // namespace oracle
