#pragma once

// Vector space model: vocabulary, term-document counts, TF-IDF weights and
// cosine similarity.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpcluster/errors.hpp"
#include "fpcluster/text.hpp"

namespace fpcluster {

struct UnknownTerm : InputError {
    explicit UnknownTerm(const std::string& term)
        : InputError("term '" + term + "' is not in the vocabulary") {}
};

struct ZeroVector : InputError {
    ZeroVector() : InputError("cosine similarity of a zero vector is undefined") {}
};

struct Vocabulary {
    std::vector<std::string> terms;          // id -> term
    std::unordered_map<std::string, int> id; // term -> id

    int size() const { return static_cast<int>(terms.size()); }
};

// Ids in order of first occurrence across documents in input order.
inline Vocabulary build_vocabulary(const std::vector<ProcessedDocument>& docs) {
    Vocabulary v;
    for (const auto& d : docs)
        for (const auto& kw : d.keywords)
            if (v.id.emplace(kw, static_cast<int>(v.terms.size())).second)
                v.terms.push_back(kw);
    return v;
}

struct TermDocumentMatrix {
    std::vector<std::vector<int>> counts;  // terms x documents
    Vocabulary vocab;
    std::vector<std::string> doc_ids;      // column order

    int num_terms() const { return static_cast<int>(counts.size()); }
    int num_docs() const { return static_cast<int>(doc_ids.size()); }
};

inline TermDocumentMatrix build_tdm(const std::vector<ProcessedDocument>& docs,
                                    const Vocabulary& vocab) {
    TermDocumentMatrix tdm;
    tdm.vocab = vocab;
    tdm.counts.assign(vocab.terms.size(), std::vector<int>(docs.size(), 0));
    tdm.doc_ids.reserve(docs.size());
    for (size_t d = 0; d < docs.size(); ++d) {
        tdm.doc_ids.push_back(docs[d].id);
        for (const auto& kw : docs[d].keywords) {
            auto it = vocab.id.find(kw);
            if (it == vocab.id.end()) throw UnknownTerm(kw);
            ++tdm.counts[it->second][d];
        }
    }
    return tdm;
}

inline double tf(int count, int doc_total) {
    return static_cast<double>(count) / static_cast<double>(doc_total);
}

inline double idf(int num_docs, int df) {
    return std::log10(static_cast<double>(num_docs) / static_cast<double>(df));
}

using DocumentVector = std::vector<double>;

// One TF-IDF vector per document (dimension = vocabulary size).
inline std::vector<DocumentVector> tfidf_vectors(const TermDocumentMatrix& tdm) {
    int V = tdm.num_terms();
    int N = tdm.num_docs();
    std::vector<int> doc_totals(N, 0);
    std::vector<int> df(V, 0);
    for (int t = 0; t < V; ++t)
        for (int d = 0; d < N; ++d) {
            doc_totals[d] += tdm.counts[t][d];
            if (tdm.counts[t][d] > 0) ++df[t];
        }
    std::vector<DocumentVector> vectors(N, DocumentVector(V, 0.0));
    for (int t = 0; t < V; ++t) {
        double w = df[t] > 0 ? idf(N, df[t]) : 0.0;
        for (int d = 0; d < N; ++d)
            if (tdm.counts[t][d] > 0)
                vectors[d][t] = tf(tdm.counts[t][d], doc_totals[d]) * w;
    }
    return vectors;
}

inline double dot(const DocumentVector& a, const DocumentVector& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const DocumentVector& a) { return std::sqrt(dot(a, a)); }

inline double euclidean_distance(const DocumentVector& a, const DocumentVector& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double cosine_similarity(const DocumentVector& a, const DocumentVector& b) {
    double na = norm(a);
    double nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw ZeroVector();
    return dot(a, b) / (na * nb);
}

// CSV export: header row = document ids, first column = term.
inline void tdm_to_csv(const TermDocumentMatrix& tdm, std::ostream& os) {
    os << "term";
    for (const auto& id : tdm.doc_ids) os << ',' << id;
    os << '\n';
    for (int t = 0; t < tdm.num_terms(); ++t) {
        os << tdm.vocab.terms[t];
        for (int d = 0; d < tdm.num_docs(); ++d) os << ',' << tdm.counts[t][d];
        os << '\n';
    }
}

inline void tfidf_to_csv(const TermDocumentMatrix& tdm,
                         const std::vector<DocumentVector>& vectors,
                         std::ostream& os) {
    os << "term";
    for (const auto& id : tdm.doc_ids) os << ',' << id;
    os << '\n';
    char buf[32];
    for (int t = 0; t < tdm.num_terms(); ++t) {
        os << tdm.vocab.terms[t];
        for (size_t d = 0; d < vectors.size(); ++d) {
            std::snprintf(buf, sizeof buf, "%.6g", vectors[d][t]);
            os << ',' << buf;
        }
        os << '\n';
    }
}

}  // namespace fpcluster
