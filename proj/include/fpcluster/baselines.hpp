#pragma once

// Comparison clusterers sharing the FP-growth seeds: Lloyd K-means and
// fixed-center cosine-similarity assignment.

#include <algorithm>
#include <cmath>
#include <vector>

#include "fpcluster/fcm.hpp"

namespace fpcluster {

struct KmeansResult {
    HardClustering clustering;
    std::vector<DocumentVector> means;
    int iterations = 0;
    bool converged = false;
    std::vector<int> emptied_clusters;  // clusters that kept a stale mean
};

// Nearest mean by Euclidean distance, ties to the lowest cluster index;
// stops when an assignment pass repeats the previous one. A cluster that
// loses all members keeps its previous mean.
inline KmeansResult kmeans_run(const std::vector<DocumentVector>& vectors,
                               const ClusterSeeds& seeds, int max_iter = 100) {
    KmeansResult res;
    res.means = seeds.centroids;
    size_t C = res.means.size();
    std::vector<int> prev;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<int> assign(vectors.size(), 0);
        for (size_t i = 0; i < vectors.size(); ++i) {
            double best = euclidean_distance(vectors[i], res.means[0]);
            for (size_t j = 1; j < C; ++j) {
                double d = euclidean_distance(vectors[i], res.means[j]);
                if (d < best) {
                    best = d;
                    assign[i] = static_cast<int>(j);
                }
            }
        }
        res.iterations = it;
        if (!prev.empty() && assign == prev) {
            res.converged = true;
            break;
        }
        for (size_t j = 0; j < C; ++j) {
            DocumentVector mean(vectors.front().size(), 0.0);
            int members = 0;
            for (size_t i = 0; i < vectors.size(); ++i)
                if (assign[i] == static_cast<int>(j)) {
                    ++members;
                    for (size_t t = 0; t < mean.size(); ++t) mean[t] += vectors[i][t];
                }
            if (members == 0) {
                if (std::find(res.emptied_clusters.begin(), res.emptied_clusters.end(),
                              static_cast<int>(j)) == res.emptied_clusters.end())
                    res.emptied_clusters.push_back(static_cast<int>(j));
                continue;
            }
            for (double& x : mean) x /= members;
            res.means[j] = std::move(mean);
        }
        prev = std::move(assign);
    }
    res.clustering.assignment = std::move(prev);
    res.clustering.clusters = static_cast<int>(C);
    return res;
}

struct CosineAssignResult {
    HardClustering clustering;
    std::vector<int> unclustered;  // documents not covered by any maximal set
};

// Documents inside a maximal set keep that cluster (lowest-index set when
// several contain the document). Every other document goes to the seed-time
// center with the highest cosine similarity; ties to the lowest index.
// With recompute_centers the chosen cluster's center is re-averaged over its
// current members after each assignment.
inline CosineAssignResult cosine_assign(const std::vector<DocumentVector>& vectors,
                                        const std::vector<Itemset>& maximal_sets,
                                        const ClusterSeeds& seeds,
                                        bool recompute_centers = false) {
    size_t C = seeds.centroids.size();
    CosineAssignResult res;
    res.clustering.clusters = static_cast<int>(C);
    res.clustering.assignment.assign(vectors.size(), -1);
    for (size_t j = 0; j < maximal_sets.size(); ++j)
        for (int doc : maximal_sets[j].items)
            if (res.clustering.assignment[doc] < 0)
                res.clustering.assignment[doc] = static_cast<int>(j);

    std::vector<DocumentVector> centers = seeds.centroids;
    std::vector<std::vector<int>> members(C);
    for (size_t i = 0; i < vectors.size(); ++i)
        if (res.clustering.assignment[i] >= 0)
            members[res.clustering.assignment[i]].push_back(static_cast<int>(i));

    for (size_t i = 0; i < vectors.size(); ++i) {
        if (res.clustering.assignment[i] >= 0) continue;
        res.unclustered.push_back(static_cast<int>(i));
        int best = 0;
        double best_sim = cosine_similarity(vectors[i], centers[0]);
        for (size_t j = 1; j < C; ++j) {
            double sim = cosine_similarity(vectors[i], centers[j]);
            if (sim > best_sim) {
                best_sim = sim;
                best = static_cast<int>(j);
            }
        }
        res.clustering.assignment[i] = best;
        if (recompute_centers) {
            members[best].push_back(static_cast<int>(i));
            DocumentVector mean(vectors.front().size(), 0.0);
            for (int doc : members[best])
                for (size_t t = 0; t < mean.size(); ++t) mean[t] += vectors[doc][t];
            for (double& x : mean) x /= members[best].size();
            centers[best] = std::move(mean);
        }
    }
    return res;
}

}  // namespace fpcluster
