#pragma once

// Fuzzy C-Means over document vectors, seeded by maximal-frequent-set
// centroids. Memberships update first (from the seed centroids), then
// centroids; iteration stops when the membership matrix stabilizes under the
// Chebyshev norm.

#include <cmath>
#include <string>
#include <vector>

#include "fpcluster/errors.hpp"
#include "fpcluster/fpgrowth.hpp"

namespace fpcluster {

struct NoSeeds : ConfigError {
    using ConfigError::ConfigError;
};

struct DegenerateCluster : std::runtime_error {
    explicit DegenerateCluster(int cluster)
        : std::runtime_error("cluster " + std::to_string(cluster) +
                             " has zero total membership weight") {}
};

struct ClusterSeeds {
    std::vector<DocumentVector> centroids;
    std::vector<Itemset> provenance;  // the frequent set behind each centroid

    int count() const { return static_cast<int>(centroids.size()); }
};

// One centroid per maximal set: the coordinate-wise mean of its members.
inline ClusterSeeds compute_seeds(const std::vector<Itemset>& maximal_sets,
                                  const std::vector<DocumentVector>& vectors) {
    if (maximal_sets.empty())
        throw NoSeeds("no frequent document sets to seed clusters from");
    ClusterSeeds seeds;
    seeds.provenance = maximal_sets;
    for (const auto& set : maximal_sets) {
        DocumentVector c(vectors.front().size(), 0.0);
        for (int doc : set.items)
            for (size_t t = 0; t < c.size(); ++t) c[t] += vectors[doc][t];
        for (double& x : c) x /= static_cast<double>(set.items.size());
        seeds.centroids.push_back(std::move(c));
    }
    return seeds;
}

using MembershipMatrix = std::vector<std::vector<double>>;  // N x C, rows sum to 1

// u_ij = 1 / sum_k (d_ij / d_ik)^(2/(m-1)); documents coinciding with one or
// more centroids split membership equally over the zero-distance clusters.
inline MembershipMatrix update_memberships(const std::vector<DocumentVector>& vectors,
                                           const std::vector<DocumentVector>& centroids,
                                           double m) {
    size_t N = vectors.size();
    size_t C = centroids.size();
    double expo = 2.0 / (m - 1.0);
    MembershipMatrix u(N, std::vector<double>(C, 0.0));
    std::vector<double> dist(C);
    for (size_t i = 0; i < N; ++i) {
        int zero_count = 0;
        for (size_t j = 0; j < C; ++j) {
            dist[j] = euclidean_distance(vectors[i], centroids[j]);
            if (dist[j] == 0.0) ++zero_count;
        }
        if (zero_count > 0) {
            for (size_t j = 0; j < C; ++j)
                u[i][j] = dist[j] == 0.0 ? 1.0 / zero_count : 0.0;
            continue;
        }
        for (size_t j = 0; j < C; ++j) {
            double denom = 0.0;
            for (size_t k = 0; k < C; ++k)
                denom += std::pow(dist[j] / dist[k], expo);
            u[i][j] = 1.0 / denom;
        }
    }
    return u;
}

// c_j = sum_i u_ij^m x_i / sum_i u_ij^m
inline std::vector<DocumentVector> update_centroids(
    const std::vector<DocumentVector>& vectors, const MembershipMatrix& u, double m) {
    size_t N = vectors.size();
    size_t C = u.front().size();
    size_t V = vectors.front().size();
    std::vector<DocumentVector> centroids(C, DocumentVector(V, 0.0));
    for (size_t j = 0; j < C; ++j) {
        double weight_sum = 0.0;
        for (size_t i = 0; i < N; ++i) {
            double w = std::pow(u[i][j], m);
            weight_sum += w;
            for (size_t t = 0; t < V; ++t) centroids[j][t] += w * vectors[i][t];
        }
        if (weight_sum == 0.0) throw DegenerateCluster(static_cast<int>(j));
        for (double& x : centroids[j]) x /= weight_sum;
    }
    return centroids;
}

inline double fcm_objective(const std::vector<DocumentVector>& vectors,
                            const MembershipMatrix& u,
                            const std::vector<DocumentVector>& centroids, double m) {
    double j_m = 0.0;
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = 0; j < centroids.size(); ++j) {
            double d = euclidean_distance(vectors[i], centroids[j]);
            j_m += std::pow(u[i][j], m) * d * d;
        }
    return j_m;
}

struct FcmResult {
    MembershipMatrix memberships;
    std::vector<DocumentVector> centroids;
    int iterations = 0;
    std::vector<double> objective_trace;
    bool converged = false;
};

inline double chebyshev(const MembershipMatrix& a, const MembershipMatrix& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}

inline FcmResult fcm_run(const std::vector<DocumentVector>& vectors,
                         const ClusterSeeds& seeds, double m = 2.0,
                         double epsilon = 1e-5, int max_iter = 100) {
    FcmResult res;
    res.centroids = seeds.centroids;
    MembershipMatrix prev;
    for (int it = 1; it <= max_iter; ++it) {
        res.memberships = update_memberships(vectors, res.centroids, m);
        res.centroids = update_centroids(vectors, res.memberships, m);
        res.objective_trace.push_back(
            fcm_objective(vectors, res.memberships, res.centroids, m));
        res.iterations = it;
        if (!prev.empty() && chebyshev(res.memberships, prev) < epsilon) {
            res.converged = true;
            break;
        }
        prev = res.memberships;
    }
    return res;
}

struct HardClustering {
    std::vector<int> assignment;  // document index -> cluster index
    int clusters = 0;
};

// Argmax per document, ties to the lowest cluster index.
inline HardClustering harden(const MembershipMatrix& u) {
    HardClustering hc;
    hc.clusters = u.empty() ? 0 : static_cast<int>(u.front().size());
    hc.assignment.reserve(u.size());
    for (const auto& row : u) {
        int best = 0;
        for (size_t j = 1; j < row.size(); ++j)
            if (row[j] > row[best]) best = static_cast<int>(j);
        hc.assignment.push_back(best);
    }
    return hc;
}

}  // namespace fpcluster
