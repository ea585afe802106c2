#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "fpcluster/text.hpp"

using namespace fpcluster;

TEST_CASE("tokenize splits on non-alphanumerics and lowercases") {
    CHECK(tokenize("Hello, World!") == std::vector<std::string>{"hello", "world"});
    CHECK(tokenize("a-b_c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(tokenize("IPv6 routing") == std::vector<std::string>{"ipv6", "routing"});
    CHECK(tokenize("") == std::vector<std::string>{});
    CHECK(tokenize("...") == std::vector<std::string>{});
    CHECK(tokenize("one  two\tthree\nfour") ==
          std::vector<std::string>{"one", "two", "three", "four"});
    CHECK(tokenize("trailing token") == std::vector<std::string>{"trailing", "token"});
}

TEST_CASE("tokenize treats non-ASCII bytes as separators") {
    CHECK(tokenize("caf\xc3\xa9 bar") == std::vector<std::string>{"caf", "bar"});
}

TEST_CASE("stopword removal is an order-preserving projection") {
    std::vector<std::string> tokens{"a", "social", "network", "is", "a", "service"};
    std::unordered_set<std::string> stop{"a", "is"};
    auto out = remove_stopwords(tokens, stop);
    CHECK(out == std::vector<std::string>{"social", "network", "service"});
    for (const auto& t : out)
        CHECK(std::count(tokens.begin(), tokens.end(), t) > 0);
    CHECK(remove_stopwords(tokens, {}) == tokens);
}

TEST_CASE("allowlist keeps only listed surface forms, or everything when absent") {
    std::vector<std::string> tokens{"social", "network", "service", "online"};
    std::optional<std::unordered_set<std::string>> allow{{"network", "service"}};
    CHECK(apply_allowlist(tokens, allow) ==
          std::vector<std::string>{"network", "service"});
    CHECK(apply_allowlist(tokens, std::nullopt) == tokens);
}

TEST_CASE("preprocessing stems and applies the canonical map, surface form first") {
    PreprocessConfig cfg;
    cfg.canonical = {{"communities", "community"}, {"commun", "communication"}};
    RawDocument doc{"d", "communities enable communication", {}};
    auto out = preprocess_document(doc, cfg);
    // "communities" hits the surface key before stemming; "communication"
    // stems to "commun", which the stem key maps back.
    CHECK(out.keywords ==
          std::vector<std::string>{"community", "enabl", "communication"});
}

TEST_CASE("unmapped tokens keep their stem") {
    PreprocessConfig cfg;
    RawDocument doc{"d", "networks users", {}};
    CHECK(preprocess_document(doc, cfg).keywords ==
          std::vector<std::string>{"network", "user"});
}

TEST_CASE("disabling stemming bypasses both stem and canonical map") {
    PreprocessConfig cfg;
    cfg.stemming_enabled = false;
    cfg.canonical = {{"networks", "network"}};
    RawDocument doc{"d", "Networks Users", {}};
    CHECK(preprocess_document(doc, cfg).keywords ==
          std::vector<std::string>{"networks", "users"});
}

TEST_CASE("stopwords are matched before stemming, allowlist on surface forms") {
    PreprocessConfig cfg;
    cfg.stopwords = {"the", "of"};
    cfg.allowlist = {{"networks", "computers"}};
    RawDocument doc{"d", "the networks of computers and signals", {}};
    // "signals" and "and" fall to the allowlist; the stopwords go first.
    CHECK(preprocess_document(doc, cfg).keywords ==
          std::vector<std::string>{"network", "comput"});
}

TEST_CASE("document with nothing left after filtering is rejected") {
    PreprocessConfig cfg;
    cfg.stopwords = {"the"};
    RawDocument doc{"D9", "the the THE", {}};
    CHECK_THROWS_AS(preprocess_document(doc, cfg), EmptyDocument);
    CHECK_THROWS_AS(preprocess_document({"D9", "...", {}}, cfg), EmptyDocument);
    try {
        preprocess_document(doc, cfg);
    } catch (const EmptyDocument& e) {
        CHECK(std::string(e.what()).find("D9") != std::string::npos);
    }
}

TEST_CASE("preprocessing is deterministic and duplicate-preserving") {
    PreprocessConfig cfg;
    RawDocument doc{"d", "networks network networking", {}};
    auto first = preprocess_document(doc, cfg);
    auto second = preprocess_document(doc, cfg);
    CHECK(first.keywords == second.keywords);
    CHECK(first.keywords == std::vector<std::string>{"network", "network", "network"});
}
