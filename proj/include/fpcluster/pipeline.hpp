#pragma once

// End-to-end pipeline: ingest a corpus, preprocess, build vectors, mine
// maximal frequent document sets, seed and run the chosen clusterer, and
// emit a deterministic report tree.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fpcluster/baselines.hpp"
#include "fpcluster/corpus.hpp"
#include "fpcluster/errors.hpp"
#include "fpcluster/fcm.hpp"
#include "fpcluster/fixture.hpp"
#include "fpcluster/fpgrowth.hpp"
#include "fpcluster/metrics.hpp"
#include "fpcluster/text.hpp"

namespace fpcluster {

struct ParseError : InputError {
    ParseError(const std::string& where, int line, const std::string& what)
        : InputError(where + ":" + std::to_string(line) + ": " + what) {}
};

struct DuplicateId : InputError {
    explicit DuplicateId(const std::string& id)
        : InputError("duplicate document id '" + id + "'") {}
};

struct CorpusEmpty : InputError {
    CorpusEmpty() : InputError("corpus contains no documents") {}
};

enum class Algorithm { fcm, kmeans, cosine };

inline std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::fcm: return "fcm";
        case Algorithm::kmeans: return "kmeans";
        case Algorithm::cosine: return "cosine";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& name) {
    if (name == "fcm") return Algorithm::fcm;
    if (name == "kmeans") return Algorithm::kmeans;
    if (name == "cosine") return Algorithm::cosine;
    throw ConfigError("unknown algorithm '" + name + "' (expected fcm, kmeans or cosine)");
}

enum class CorpusFormat { jsonl, directory, keywords_jsonl };

inline CorpusFormat parse_format(const std::string& name) {
    if (name == "jsonl") return CorpusFormat::jsonl;
    if (name == "directory") return CorpusFormat::directory;
    if (name == "keywords-jsonl") return CorpusFormat::keywords_jsonl;
    throw ConfigError("unknown format '" + name +
                      "' (expected jsonl, directory or keywords-jsonl)");
}

struct CorpusInput {
    std::vector<RawDocument> raw;        // jsonl / directory formats
    std::vector<ProcessedDocument> docs; // keywords-jsonl format
    std::vector<std::optional<std::string>> labels;
    bool pre_tokenized = false;

    size_t size() const { return pre_tokenized ? docs.size() : raw.size(); }
    const std::string& id(size_t i) const {
        return pre_tokenized ? docs[i].id : raw[i].id;
    }
};

namespace pipeline_detail {

using json = nlohmann::ordered_json;

inline void check_unique_ids(const CorpusInput& in) {
    std::unordered_set<std::string> seen;
    for (size_t i = 0; i < in.size(); ++i)
        if (!seen.insert(in.id(i)).second) throw DuplicateId(in.id(i));
}

inline std::optional<std::string> label_of(const json& obj) {
    if (!obj.contains("label") || obj["label"].is_null()) return std::nullopt;
    return obj["label"].get<std::string>();
}

inline json parse_line(const std::string& where, int line_no, const std::string& line) {
    try {
        json obj = json::parse(line);
        if (!obj.is_object()) throw ParseError(where, line_no, "expected a JSON object");
        if (!obj.contains("id") || !obj["id"].is_string() ||
            obj["id"].get<std::string>().empty())
            throw ParseError(where, line_no, "missing or empty 'id'");
        return obj;
    } catch (const json::exception& e) {
        throw ParseError(where, line_no, e.what());
    }
}

}  // namespace pipeline_detail

inline CorpusInput ingest_jsonl(std::istream& is, const std::string& where) {
    using pipeline_detail::parse_line;
    CorpusInput in;
    in.pre_tokenized = false;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto obj = parse_line(where, line_no, line);
        if (!obj.contains("text") || !obj["text"].is_string())
            throw ParseError(where, line_no, "missing 'text'");
        in.raw.push_back({obj["id"].get<std::string>(),
                          obj["text"].get<std::string>(),
                          pipeline_detail::label_of(obj)});
        in.labels.push_back(in.raw.back().label);
    }
    if (in.raw.empty()) throw CorpusEmpty();
    pipeline_detail::check_unique_ids(in);
    return in;
}

inline CorpusInput ingest_keywords_jsonl(std::istream& is, const std::string& where) {
    using pipeline_detail::parse_line;
    CorpusInput in;
    in.pre_tokenized = true;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto obj = parse_line(where, line_no, line);
        if (!obj.contains("keywords") || !obj["keywords"].is_array())
            throw ParseError(where, line_no, "missing 'keywords' array");
        ProcessedDocument doc{obj["id"].get<std::string>(), {}};
        for (const auto& kw : obj["keywords"]) {
            if (!kw.is_string())
                throw ParseError(where, line_no, "keywords must be strings");
            doc.keywords.push_back(kw.get<std::string>());
        }
        if (doc.keywords.empty()) throw EmptyDocument(doc.id);
        in.docs.push_back(std::move(doc));
        in.labels.push_back(pipeline_detail::label_of(obj));
    }
    if (in.docs.empty()) throw CorpusEmpty();
    pipeline_detail::check_unique_ids(in);
    return in;
}

// Each *.txt file is a document (id = filename stem), in filename order;
// labels come from an optional labels.csv sidecar with "id,label" lines.
inline CorpusInput ingest_directory(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::unordered_map<std::string, std::string> labels;
    fs::path sidecar = dir / "labels.csv";
    if (fs::exists(sidecar)) {
        std::ifstream f(sidecar);
        if (!f) throw IoError("cannot read " + sidecar.string());
        std::string line;
        int line_no = 0;
        while (std::getline(f, line)) {
            ++line_no;
            if (line.empty() || line == "id,label") continue;
            auto comma = line.find(',');
            if (comma == std::string::npos)
                throw ParseError(sidecar.string(), line_no, "expected 'id,label'");
            labels[line.substr(0, comma)] = line.substr(comma + 1);
        }
    }

    CorpusInput in;
    in.pre_tokenized = false;
    for (const auto& path : files) {
        std::ifstream f(path);
        if (!f) throw IoError("cannot read " + path.string());
        std::stringstream ss;
        ss << f.rdbuf();
        std::string id = path.stem().string();
        std::optional<std::string> label;
        if (auto it = labels.find(id); it != labels.end()) label = it->second;
        in.raw.push_back({id, ss.str(), label});
        in.labels.push_back(label);
    }
    if (in.raw.empty()) throw CorpusEmpty();
    pipeline_detail::check_unique_ids(in);
    return in;
}

inline CorpusInput ingest_corpus(const std::filesystem::path& path, CorpusFormat format) {
    if (format == CorpusFormat::directory) return ingest_directory(path);
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path.string());
    return format == CorpusFormat::jsonl ? ingest_jsonl(f, path.string())
                                         : ingest_keywords_jsonl(f, path.string());
}

// Token-per-line config files; blank lines and '#' comments ignored.
inline std::vector<std::string> load_token_lines(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) out.push_back(tok);
    }
    return out;
}

inline std::unordered_set<std::string> load_token_set(const std::filesystem::path& path) {
    auto lines = load_token_lines(path);
    return {lines.begin(), lines.end()};
}

// Canonical map file: "key form" per line; key matches surface token or stem.
inline std::unordered_map<std::string, std::string> load_canonical_map(
    const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path.string());
    std::unordered_map<std::string, std::string> map;
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key, form, extra;
        if (!(ls >> key)) continue;
        if (!(ls >> form) || (ls >> extra))
            throw ParseError(path.string(), line_no, "expected 'key form'");
        map[key] = form;
    }
    return map;
}

struct PipelineConfig {
    double min_sup = 3;  // count, or fraction of transactions in (0,1)
    Algorithm algorithm = Algorithm::fcm;
    double m = 2.0;
    double epsilon = 1e-5;
    int max_iter = 100;
    PreprocessConfig preprocess;
    bool single_prefix_opt = true;
    bool cosine_recompute_centers = false;
};

inline void validate(const PipelineConfig& cfg) {
    if (cfg.min_sup <= 0) throw ConfigError("min_sup must be positive");
    if (cfg.min_sup >= 1 && cfg.min_sup != std::floor(cfg.min_sup))
        throw ConfigError("min_sup must be an integer count or a fraction below 1");
    if (cfg.m <= 1) throw ConfigError("fuzziness m must be greater than 1");
    if (cfg.epsilon <= 0 || cfg.epsilon >= 1)
        throw ConfigError("epsilon must be in (0,1)");
    if (cfg.max_iter < 1) throw ConfigError("max_iter must be at least 1");
}

inline int resolve_min_sup(double min_sup, int num_transactions) {
    if (min_sup < 1)
        return static_cast<int>(std::ceil(min_sup * num_transactions));
    return static_cast<int>(min_sup);
}

struct RunReport {
    std::string algorithm;
    int min_sup = 0;
    double m = 0.0;
    double epsilon = 0.0;
    int max_iter = 0;
    std::vector<std::string> doc_ids;
    std::vector<Itemset> seeds;                 // document indices
    HardClustering clustering;
    std::vector<std::vector<int>> clusters;     // document indices per cluster
    MembershipMatrix memberships;               // fcm only
    std::vector<double> objective_trace;        // fcm only
    std::vector<DocumentVector> centroids;
    int iterations = 0;
    bool converged = false;
    std::vector<int> unclustered;               // cosine only
    std::vector<int> emptied_clusters;          // kmeans only
    std::optional<ConfusionTable> confusion_table;
    std::optional<EvaluationReport> metrics;
    double elapsed_ms = 0.0;  // in-memory only; never serialized
};

inline RunReport run_pipeline(const CorpusInput& input, const PipelineConfig& cfg) {
    validate(cfg);
    if (input.size() == 0) throw CorpusEmpty();

    std::vector<ProcessedDocument> docs;
    if (input.pre_tokenized) {
        docs = input.docs;
    } else {
        docs.reserve(input.raw.size());
        for (const auto& raw : input.raw)
            docs.push_back(preprocess_document(raw, cfg.preprocess));
    }

    Vocabulary vocab = build_vocabulary(docs);
    TermDocumentMatrix tdm = build_tdm(docs, vocab);
    std::vector<DocumentVector> vectors = tfidf_vectors(tdm);
    TransactionDB db = transpose_to_transactions(tdm);

    int min_sup = resolve_min_sup(cfg.min_sup, static_cast<int>(db.transactions.size()));
    FPTree tree = build_fptree(db, min_sup);
    std::vector<Itemset> complete = fp_growth(tree, min_sup, cfg.single_prefix_opt);
    std::vector<Itemset> maximal = maximal_filter(complete);
    if (maximal.empty()) {
        int max_feasible = 0;
        std::unordered_map<int, int> freq;
        for (const auto& t : db.transactions)
            for (int item : t) max_feasible = std::max(max_feasible, ++freq[item]);
        std::string msg = "no frequent document sets at min_sup=" +
                          std::to_string(min_sup) + "; highest feasible min_sup is " +
                          std::to_string(max_feasible) +
                          "; maximal-set counts by min_sup:";
        for (auto [ms, count] : support_spectrum(db))
            msg += " " + std::to_string(ms) + "->" + std::to_string(count);
        throw NoSeeds(msg);
    }
    ClusterSeeds seeds = compute_seeds(maximal, vectors);

    RunReport report;
    report.algorithm = to_string(cfg.algorithm);
    report.min_sup = min_sup;
    report.m = cfg.m;
    report.epsilon = cfg.epsilon;
    report.max_iter = cfg.max_iter;
    for (size_t i = 0; i < input.size(); ++i) report.doc_ids.push_back(input.id(i));
    report.seeds = maximal;

    switch (cfg.algorithm) {
        case Algorithm::fcm: {
            FcmResult r = fcm_run(vectors, seeds, cfg.m, cfg.epsilon, cfg.max_iter);
            report.clustering = harden(r.memberships);
            report.memberships = std::move(r.memberships);
            report.centroids = std::move(r.centroids);
            report.objective_trace = std::move(r.objective_trace);
            report.iterations = r.iterations;
            report.converged = r.converged;
            break;
        }
        case Algorithm::kmeans: {
            KmeansResult r = kmeans_run(vectors, seeds, cfg.max_iter);
            report.clustering = std::move(r.clustering);
            report.centroids = std::move(r.means);
            report.iterations = r.iterations;
            report.converged = r.converged;
            report.emptied_clusters = std::move(r.emptied_clusters);
            break;
        }
        case Algorithm::cosine: {
            CosineAssignResult r = cosine_assign(vectors, maximal, seeds,
                                                 cfg.cosine_recompute_centers);
            report.clustering = std::move(r.clustering);
            report.centroids = seeds.centroids;
            report.iterations = 1;
            report.converged = true;
            report.unclustered = std::move(r.unclustered);
            break;
        }
    }

    report.clusters.assign(report.clustering.clusters, {});
    for (size_t i = 0; i < report.clustering.assignment.size(); ++i)
        report.clusters[report.clustering.assignment[i]].push_back(static_cast<int>(i));

    bool all_labeled = !input.labels.empty();
    for (const auto& label : input.labels)
        if (!label) all_labeled = false;
    if (all_labeled) {
        report.confusion_table = confusion(report.clustering, input.labels, report.doc_ids);
        report.metrics = evaluate(*report.confusion_table);
    }
    return report;
}

namespace pipeline_detail {

inline double round6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::strtod(buf, nullptr);
}

inline std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

inline json seeds_json(const RunReport& r) {
    json seeds = json::array();
    for (const auto& set : r.seeds) {
        json items = json::array();
        for (int doc : set.items) items.push_back(r.doc_ids[doc]);
        seeds.push_back({{"items", items}, {"support", set.support}});
    }
    return seeds;
}

inline json metrics_json(const RunReport& r) {
    json per_cluster = json::array();
    for (size_t i = 0; i < r.metrics->cluster_sizes.size(); ++i)
        per_cluster.push_back({{"size", r.metrics->cluster_sizes[i]},
                               {"entropy", round6(r.metrics->cluster_entropies[i])},
                               {"purity", round6(r.metrics->cluster_purities[i])}});
    return {{"classes", r.confusion_table->class_names},
            {"confusion", r.confusion_table->counts},
            {"clusters", per_cluster},
            {"entropy", round6(r.metrics->entropy)},
            {"purity", round6(r.metrics->purity)}};
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path.string());
    f << content;
    if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace pipeline_detail

// Writes report.json, seeds.json, clusters.csv, metrics.json (when labels
// were present) and memberships.csv (fcm only). Reruns on identical inputs
// produce byte-identical files.
inline void emit_report(const RunReport& r, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    using pipeline_detail::fmt6;
    using pipeline_detail::write_file;
    using json = pipeline_detail::json;

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    json report;
    report["algorithm"] = r.algorithm;
    report["min_sup"] = r.min_sup;
    report["parameters"] = {{"m", r.m}, {"epsilon", r.epsilon}, {"max_iter", r.max_iter}};
    report["documents"] = r.doc_ids;
    report["seeds"] = pipeline_detail::seeds_json(r);
    json clusters = json::array();
    for (const auto& cluster : r.clusters) {
        json ids = json::array();
        for (int doc : cluster) ids.push_back(r.doc_ids[doc]);
        clusters.push_back(ids);
    }
    report["clusters"] = clusters;
    report["iterations"] = r.iterations;
    report["converged"] = r.converged;
    if (r.algorithm == "fcm") {
        report["objective_trace"] = r.objective_trace;
        report["memberships"] = r.memberships;
    }
    if (r.algorithm == "kmeans") report["empty_clusters"] = r.emptied_clusters;
    if (r.algorithm == "cosine") {
        json ids = json::array();
        for (int doc : r.unclustered) ids.push_back(r.doc_ids[doc]);
        report["unclustered"] = ids;
    }
    report["centroids"] = r.centroids;
    report["metrics_available"] = r.metrics.has_value();
    if (r.metrics) report["metrics"] = pipeline_detail::metrics_json(r);
    write_file(dir / "report.json", report.dump(2) + "\n");

    write_file(dir / "seeds.json", pipeline_detail::seeds_json(r).dump(2) + "\n");

    std::string clusters_csv = "doc_id,cluster,membership\n";
    for (size_t i = 0; i < r.doc_ids.size(); ++i) {
        int c = r.clustering.assignment[i];
        clusters_csv += r.doc_ids[i] + "," + std::to_string(c) + "," +
                        (r.memberships.empty() ? std::string("1")
                                               : fmt6(r.memberships[i][c])) + "\n";
    }
    write_file(dir / "clusters.csv", clusters_csv);

    if (!r.memberships.empty()) {
        std::string csv = "doc_id";
        for (int j = 0; j < r.clustering.clusters; ++j)
            csv += ",cluster_" + std::to_string(j);
        csv += "\n";
        for (size_t i = 0; i < r.doc_ids.size(); ++i) {
            csv += r.doc_ids[i];
            for (int j = 0; j < r.clustering.clusters; ++j)
                csv += "," + fmt6(r.memberships[i][j]);
            csv += "\n";
        }
        write_file(dir / "memberships.csv", csv);
    }

    if (r.metrics)
        write_file(dir / "metrics.json", pipeline_detail::metrics_json(r).dump(2) + "\n");
}

// Runs fcm, kmeans and cosine on the bundled sample corpus with the default
// configuration, writes one result tree per algorithm under out_dir, and
// prints a comparison table.
inline std::vector<RunReport> reproduce_paper(const std::filesystem::path& out_dir,
                                              std::ostream& os) {
    std::istringstream fixture_stream{std::string(fixture::keywords_jsonl)};
    CorpusInput input = ingest_keywords_jsonl(fixture_stream, "<bundled sample>");
    std::vector<RunReport> reports;
    for (Algorithm a : {Algorithm::fcm, Algorithm::kmeans, Algorithm::cosine}) {
        PipelineConfig cfg;
        cfg.algorithm = a;
        RunReport r = run_pipeline(input, cfg);
        emit_report(r, out_dir / to_string(a));
        reports.push_back(std::move(r));
    }
    char line[96];
    os << "algorithm  entropy  purity\n";
    for (const auto& r : reports) {
        std::snprintf(line, sizeof line, "%-9s  %7.4f  %6.4f\n", r.algorithm.c_str(),
                      r.metrics->entropy, r.metrics->purity);
        os << line;
    }
    return reports;
}

}  // namespace fpcluster
