#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "psf/core.hpp"

namespace psf {

/// Cluster assignment of the rows of a CycleMatrix.
struct Clustering {
    std::vector<int> labels;                   // one per row, in [0, k)
    std::vector<std::vector<double>> centroids;  // k vectors of length cycle
    int k = 0;
    double wcss = 0.0;  // within-cluster sum of squared distances

    int nearest(std::span<const double> point) const {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int j = 0; j < k; ++j) {
            const double d = squared_distance(point, centroids[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        return best;
    }
};

struct KMeansOptions {
    int max_iterations = 300;
    // Independent k-means++ starts; the lowest-WCSS run is kept.
    int restarts = 10;
    // Called with the WCSS after every centroid update.
    std::function<void(double)> on_iteration;
};

namespace detail {

/// Deterministic stream for (seed, k, restart). Uses only standard-specified
/// engines so results do not depend on the standard library vendor.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t k, std::uint64_t restart) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(restart)};
        engine_.seed(seq);
    }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::size_t index(std::size_t n) {
        return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
    }

private:
    std::mt19937_64 engine_;
};

inline std::vector<std::vector<double>> kmeanspp_centers(const CycleMatrix& m, int k, Rng& rng) {
    const std::size_t n = m.rows();
    std::vector<std::vector<double>> centers;
    centers.reserve(k);
    const auto first = m.row(rng.index(n));
    centers.emplace_back(first.begin(), first.end());
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) {
        d2[i] = squared_distance(m.row(i), centers.front());
    }
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (double d : d2) {
            total += d;
        }
        std::size_t pick = 0;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (acc > target && d2[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = rng.index(n);
        }
        const auto row = m.row(pick);
        centers.emplace_back(row.begin(), row.end());
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], squared_distance(m.row(i), centers.back()));
        }
    }
    return centers;
}

inline void update_centroids(const CycleMatrix& m, Clustering& c) {
    const std::size_t cycle = m.cycle();
    std::vector<std::size_t> counts(c.k, 0);
    for (auto& centroid : c.centroids) {
        std::fill(centroid.begin(), centroid.end(), 0.0);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        auto& centroid = c.centroids[c.labels[i]];
        for (std::size_t d = 0; d < cycle; ++d) {
            centroid[d] += row[d];
        }
        ++counts[c.labels[i]];
    }
    for (int j = 0; j < c.k; ++j) {
        for (double& v : c.centroids[j]) {
            v /= static_cast<double>(counts[j]);
        }
    }
}

inline double compute_wcss(const CycleMatrix& m, const Clustering& c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        sum += squared_distance(m.row(i), c.centroids[c.labels[i]]);
    }
    return sum;
}

/// Moves the point farthest from its own centroid into each empty cluster.
/// Donor clusters must keep at least one member. Returns true if anything moved.
inline bool reseed_empty(const CycleMatrix& m, Clustering& c) {
    bool moved = false;
    std::vector<std::size_t> counts(c.k, 0);
    for (int label : c.labels) {
        ++counts[label];
    }
    for (int j = 0; j < c.k; ++j) {
        if (counts[j] != 0) {
            continue;
        }
        std::size_t far = m.rows();
        double far_d = -1.0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (counts[c.labels[i]] < 2) {
                continue;
            }
            const double d = squared_distance(m.row(i), c.centroids[c.labels[i]]);
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        --counts[c.labels[far]];
        c.labels[far] = j;
        counts[j] = 1;
        moved = true;
    }
    return moved;
}

/// Single-point moves that lower WCSS once centroid shifts are accounted for.
/// Fixed points of this pass are also fixed points of Lloyd's iteration.
inline bool hartigan_pass(const CycleMatrix& m, Clustering& c) {
    std::vector<std::size_t> counts(c.k, 0);
    for (int label : c.labels) {
        ++counts[label];
    }
    bool moved = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const int from = c.labels[i];
        if (counts[from] < 2) {
            continue;
        }
        const auto row = m.row(i);
        const double na = static_cast<double>(counts[from]);
        const double removal_gain = na / (na - 1.0) * squared_distance(row, c.centroids[from]);
        int to = from;
        double best_cost = removal_gain;
        for (int j = 0; j < c.k; ++j) {
            if (j == from) {
                continue;
            }
            const double nb = static_cast<double>(counts[j]);
            const double cost = nb / (nb + 1.0) * squared_distance(row, c.centroids[j]);
            if (cost < best_cost) {
                best_cost = cost;
                to = j;
            }
        }
        // Relative margin keeps round-off from cycling points between clusters.
        if (to == from || best_cost >= removal_gain * (1.0 - 1e-12)) {
            continue;
        }
        const double nb = static_cast<double>(counts[to]);
        for (std::size_t d = 0; d < row.size(); ++d) {
            c.centroids[from][d] = (c.centroids[from][d] * na - row[d]) / (na - 1.0);
            c.centroids[to][d] = (c.centroids[to][d] * nb + row[d]) / (nb + 1.0);
        }
        --counts[from];
        ++counts[to];
        c.labels[i] = to;
        moved = true;
    }
    return moved;
}

inline Clustering run_from(const CycleMatrix& m, std::vector<std::vector<double>> centers, const KMeansOptions& opts) {
    Clustering c;
    c.k = static_cast<int>(centers.size());
    c.centroids = std::move(centers);
    c.labels.assign(m.rows(), -1);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const int label = c.nearest(m.row(i));
            if (label != c.labels[i]) {
                c.labels[i] = label;
                changed = true;
            }
        }
        changed = reseed_empty(m, c) || changed;
        if (!changed) {
            break;
        }
        update_centroids(m, c);
        if (opts.on_iteration) {
            opts.on_iteration(compute_wcss(m, c));
        }
    }
    for (int pass = 0; pass < opts.max_iterations && hartigan_pass(m, c); ++pass) {
        update_centroids(m, c);
        if (opts.on_iteration) {
            opts.on_iteration(compute_wcss(m, c));
        }
    }
    c.wcss = compute_wcss(m, c);
    return c;
}

}  // namespace detail

/**
 * k-means with k-means++ seeding: Lloyd iterations to a fixpoint (or the
 * iteration cap), then Hartigan single-point moves until none improves WCSS.
 *
 * Each restart r draws from an RNG stream derived from (seed, k, r), so the
 * result depends only on the arguments. Ties between restarts keep the
 * earliest one; ties between centroids go to the lower index.
 */
inline Clustering kmeans(const CycleMatrix& matrix, int k, std::uint64_t seed, const KMeansOptions& opts = {}) {
    if (k < 1) {
        throw Error("k must be at least 1");
    }
    if (static_cast<std::size_t>(k) > matrix.rows()) {
        throw Error("more clusters than cycle blocks: k=" + std::to_string(k) + ", blocks=" +
                    std::to_string(matrix.rows()));
    }
    Clustering best;
    best.wcss = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, opts.restarts); ++r) {
        detail::Rng rng(seed, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(r));
        auto run = detail::run_from(matrix, detail::kmeanspp_centers(matrix, k, rng), opts);
        if (run.wcss < best.wcss) {
            best = std::move(run);
        }
    }
    return best;
}

/// Mean silhouette width with Euclidean distance. Rows in singleton clusters
/// score 0, as does any row with a(i) = b(i) = 0.
inline double silhouette(const CycleMatrix& matrix, std::span<const int> labels) {
    if (labels.size() != matrix.rows()) {
        throw Error("label count does not match matrix rows");
    }
    const std::set<int> distinct(labels.begin(), labels.end());
    if (distinct.size() < 2) {
        throw Error("silhouette undefined for k=1");
    }
    const int max_label = *distinct.rbegin();
    const std::size_t n = matrix.rows();

    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::sqrt(squared_distance(matrix.row(i), matrix.row(j)));
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }

    std::vector<std::size_t> sizes(max_label + 1, 0);
    for (int label : labels) {
        ++sizes[label];
    }

    double total = 0.0;
    std::vector<double> sums(max_label + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const int own = labels[i];
        if (sizes[own] == 1) {
            continue;
        }
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            sums[labels[j]] += dist[i * n + j];
        }
        const double a = sums[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c <= max_label; ++c) {
            if (c != own && sizes[c] > 0) {
                b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
            }
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) {
            total += (b - a) / denom;
        }
    }
    return total / static_cast<double>(n);
}

inline double silhouette(const CycleMatrix& matrix, const Clustering& clustering) {
    return silhouette(matrix, clustering.labels);
}

struct KSelection {
    int k = 0;
    Clustering clustering;
    std::vector<std::pair<int, double>> scores;  // (k, silhouette) for every evaluated k
};

/// Picks the k in `k_grid` with the highest silhouette; ties go to the smaller k.
/// Grid values outside [2, rows] are skipped with a warning.
inline KSelection optimum_k(const CycleMatrix& matrix, std::span<const int> k_grid, std::uint64_t seed,
                            Warnings* warnings = nullptr, unsigned threads = 1, const KMeansOptions& opts = {}) {
    std::set<int> ordered;
    for (int k : k_grid) {
        if (k < 2) {
            warn(warnings, "skipping k=" + std::to_string(k) + ": silhouette needs at least 2 clusters");
        } else if (static_cast<std::size_t>(k) > matrix.rows()) {
            warn(warnings, "skipping k=" + std::to_string(k) + ": only " + std::to_string(matrix.rows()) +
                               " cycle blocks");
        } else {
            ordered.insert(k);
        }
    }
    if (ordered.empty()) {
        throw Error("no feasible value in the k grid");
    }
    const std::vector<int> ks(ordered.begin(), ordered.end());
    std::vector<Clustering> runs(ks.size());
    std::vector<double> scores(ks.size());
    detail::parallel_for(ks.size(), threads, [&](std::size_t i) {
        runs[i] = kmeans(matrix, ks[i], seed, opts);
        // Duplicate rows can leave fewer distinct clusters than k; nothing to score then.
        const std::set<int> used(runs[i].labels.begin(), runs[i].labels.end());
        scores[i] = used.size() < 2 ? -1.0 : silhouette(matrix, runs[i]);
    });

    KSelection out;
    std::size_t best = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        out.scores.emplace_back(ks[i], scores[i]);
        if (scores[i] > scores[best]) {
            best = i;
        }
    }
    out.k = ks[best];
    out.clustering = std::move(runs[best]);
    return out;
}

}  // namespace psf
