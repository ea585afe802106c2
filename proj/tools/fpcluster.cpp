#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fpcluster/pipeline.hpp"

namespace {

void print_summary(const fpcluster::RunReport& r, std::ostream& os) {
    os << "seeds:\n";
    for (const auto& set : r.seeds) {
        os << " ";
        for (int doc : set.items) os << ' ' << r.doc_ids[doc];
        os << "  (support " << set.support << ")\n";
    }
    os << "clusters (" << r.algorithm << ", " << r.iterations << " iteration"
       << (r.iterations == 1 ? "" : "s")
       << (r.converged ? "" : ", not converged") << "):\n";
    for (size_t c = 0; c < r.clusters.size(); ++c) {
        os << "  " << c << ":";
        for (int doc : r.clusters[c]) os << ' ' << r.doc_ids[doc];
        os << '\n';
    }
    if (r.metrics) fpcluster::print_evaluation(*r.confusion_table, *r.metrics, os);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Clusters text documents: maximal frequent document sets mined with "
        "FP-growth seed fuzzy c-means over TF-IDF vectors; k-means and "
        "cosine-similarity assignment are available as baselines."};

    std::string input, format = "jsonl", algorithm = "fcm", out = "out";
    std::string stopwords_path, allowlist_path, canonical_path;
    double min_sup = 3, m = 2.0, epsilon = 1e-5;
    int max_iter = 100;
    bool reproduce = false, no_stemming = false, no_single_prefix = false;
    bool recompute_centers = false;

    app.add_option("--input", input, "corpus file (or directory with --format directory)");
    app.add_option("--format", format,
                   "corpus format: jsonl, directory or keywords-jsonl")
        ->capture_default_str();
    app.add_option("--min-sup", min_sup,
                   "minimum support: a count, or a fraction of the transaction "
                   "count in (0,1), converted by ceiling")
        ->capture_default_str();
    app.add_option("--algorithm", algorithm, "fcm, kmeans or cosine")
        ->capture_default_str();
    app.add_option("--m", m, "fuzziness exponent, > 1")->capture_default_str();
    app.add_option("--epsilon", epsilon,
                   "stop when memberships change less than this")
        ->capture_default_str();
    app.add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();
    app.add_option("--stopwords", stopwords_path,
                   "stopword file, one token per line, '#' comments");
    app.add_option("--allowlist", allowlist_path,
                   "keyword allowlist file, same format; absent means keep all");
    app.add_option("--canonical", canonical_path,
                   "canonical-form map file with 'key form' lines");
    app.add_option("--out", out, "output directory")->capture_default_str();
    app.add_flag("--reproduce-paper", reproduce,
                 "run all three algorithms on the bundled sample corpus, write "
                 "one result tree each under --out, and print a comparison table");
    app.add_flag("--no-stemming", no_stemming,
                 "disable stemming and canonical-form mapping");
    app.add_flag("--no-single-prefix-path", no_single_prefix,
                 "disable the miner's single-path shortcut");
    app.add_flag("--recompute-centers", recompute_centers,
                 "cosine only: re-average a cluster's center after each assignment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reproduce) {
            fpcluster::reproduce_paper(out, std::cout);
            return 0;
        }
        if (input.empty())
            throw fpcluster::ConfigError("--input is required (or use --reproduce-paper)");

        fpcluster::PipelineConfig cfg;
        cfg.min_sup = min_sup;
        cfg.algorithm = fpcluster::parse_algorithm(algorithm);
        cfg.m = m;
        cfg.epsilon = epsilon;
        cfg.max_iter = max_iter;
        cfg.single_prefix_opt = !no_single_prefix;
        cfg.cosine_recompute_centers = recompute_centers;
        cfg.preprocess.stemming_enabled = !no_stemming;
        if (!stopwords_path.empty())
            cfg.preprocess.stopwords = fpcluster::load_token_set(stopwords_path);
        if (!allowlist_path.empty())
            cfg.preprocess.allowlist = fpcluster::load_token_set(allowlist_path);
        if (!canonical_path.empty())
            cfg.preprocess.canonical = fpcluster::load_canonical_map(canonical_path);

        fpcluster::CorpusInput corpus =
            fpcluster::ingest_corpus(input, fpcluster::parse_format(format));

        auto start = std::chrono::steady_clock::now();
        fpcluster::RunReport report = fpcluster::run_pipeline(corpus, cfg);
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        fpcluster::emit_report(report, out);
        print_summary(report, std::cout);
        return 0;
    } catch (const fpcluster::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fpcluster::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const fpcluster::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
