#pragma once

// External clustering evaluation against gold labels: per-cluster and total
// entropy (log base 2) and purity, size-weighted.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fpcluster/errors.hpp"
#include "fpcluster/fcm.hpp"

namespace fpcluster {

struct MissingLabel : InputError {
    explicit MissingLabel(const std::string& id)
        : InputError("document '" + id + "' has no class label") {}
};

struct ConfusionTable {
    std::vector<std::vector<int>> counts;  // cluster x class
    std::vector<int> cluster_sizes;
    int total = 0;
    std::vector<std::string> class_names;  // first-appearance order
};

inline ConfusionTable confusion(const HardClustering& clustering,
                                const std::vector<std::optional<std::string>>& labels,
                                const std::vector<std::string>& doc_ids = {}) {
    ConfusionTable t;
    for (size_t i = 0; i < clustering.assignment.size(); ++i)
        if (!labels[i])
            throw MissingLabel(doc_ids.empty() ? "#" + std::to_string(i) : doc_ids[i]);
    std::vector<int> class_of;
    class_of.reserve(labels.size());
    for (const auto& label : labels) {
        auto it = std::find(t.class_names.begin(), t.class_names.end(), *label);
        if (it == t.class_names.end()) {
            t.class_names.push_back(*label);
            class_of.push_back(static_cast<int>(t.class_names.size()) - 1);
        } else {
            class_of.push_back(static_cast<int>(it - t.class_names.begin()));
        }
    }
    t.counts.assign(clustering.clusters,
                    std::vector<int>(t.class_names.size(), 0));
    t.cluster_sizes.assign(clustering.clusters, 0);
    for (size_t i = 0; i < clustering.assignment.size(); ++i) {
        ++t.counts[clustering.assignment[i]][class_of[i]];
        ++t.cluster_sizes[clustering.assignment[i]];
        ++t.total;
    }
    return t;
}

// E_i = -sum_j p_ij log2 p_ij with p_ij = m_ij / m_i and 0 log 0 = 0.
inline double cluster_entropy(const std::vector<int>& row) {
    int size = 0;
    for (int c : row) size += c;
    double e = 0.0;
    for (int c : row) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / size;
        e -= p * std::log2(p);
    }
    return e;
}

inline double cluster_purity(const std::vector<int>& row) {
    int size = 0, best = 0;
    for (int c : row) {
        size += c;
        best = std::max(best, c);
    }
    return static_cast<double>(best) / size;
}

inline double total_entropy(const ConfusionTable& t) {
    double e = 0.0;
    for (size_t i = 0; i < t.counts.size(); ++i)
        if (t.cluster_sizes[i] > 0)
            e += static_cast<double>(t.cluster_sizes[i]) / t.total *
                 cluster_entropy(t.counts[i]);
    return e;
}

inline double total_purity(const ConfusionTable& t) {
    double p = 0.0;
    for (size_t i = 0; i < t.counts.size(); ++i)
        if (t.cluster_sizes[i] > 0)
            p += static_cast<double>(t.cluster_sizes[i]) / t.total *
                 cluster_purity(t.counts[i]);
    return p;
}

struct EvaluationReport {
    std::vector<double> cluster_entropies;
    std::vector<double> cluster_purities;
    std::vector<int> cluster_sizes;
    double entropy = 0.0;
    double purity = 0.0;
};

inline EvaluationReport evaluate(const ConfusionTable& t) {
    EvaluationReport r;
    for (size_t i = 0; i < t.counts.size(); ++i) {
        r.cluster_entropies.push_back(
            t.cluster_sizes[i] > 0 ? cluster_entropy(t.counts[i]) : 0.0);
        r.cluster_purities.push_back(
            t.cluster_sizes[i] > 0 ? cluster_purity(t.counts[i]) : 0.0);
        r.cluster_sizes.push_back(t.cluster_sizes[i]);
    }
    r.entropy = total_entropy(t);
    r.purity = total_purity(t);
    return r;
}

// Aligned plain-text table of per-cluster counts and scores.
inline void print_evaluation(const ConfusionTable& t, const EvaluationReport& r,
                             std::ostream& os) {
    os << std::left << std::setw(10) << "cluster";
    for (const auto& name : t.class_names) os << std::setw(12) << name;
    os << std::setw(8) << "total" << std::setw(10) << "entropy"
       << std::setw(10) << "purity" << '\n';
    os << std::fixed << std::setprecision(4);
    for (size_t i = 0; i < t.counts.size(); ++i) {
        os << std::setw(10) << i;
        for (int c : t.counts[i]) os << std::setw(12) << c;
        os << std::setw(8) << t.cluster_sizes[i] << std::setw(10)
           << r.cluster_entropies[i] << std::setw(10) << r.cluster_purities[i]
           << '\n';
    }
    os << std::setw(10) << "total";
    for (size_t j = 0; j < t.class_names.size(); ++j) {
        int col = 0;
        for (const auto& row : t.counts) col += row[j];
        os << std::setw(12) << col;
    }
    os << std::setw(8) << t.total << std::setw(10) << r.entropy << std::setw(10)
       << r.purity << '\n';
    os.unsetf(std::ios::fixed);
}

}  // namespace fpcluster
