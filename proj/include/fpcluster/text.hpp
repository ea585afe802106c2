#pragma once

// Preprocessing: tokenize raw text, drop stopwords, apply the optional
// keyword allowlist, stem, and map stems to canonical surface forms.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fpcluster/errors.hpp"
#include "fpcluster/porter.hpp"

namespace fpcluster {

struct RawDocument {
    std::string id;
    std::string text;
    std::optional<std::string> label;
};

struct ProcessedDocument {
    std::string id;
    std::vector<std::string> keywords;  // ordered, duplicates preserved
};

struct PreprocessConfig {
    std::unordered_set<std::string> stopwords;
    std::optional<std::unordered_set<std::string>> allowlist;
    bool stemming_enabled = true;
    // Canonical-form map consulted with the surface token first, then with
    // its stem; unmatched tokens keep the stem itself. Only used when
    // stemming is enabled.
    std::unordered_map<std::string, std::string> canonical;
};

struct EmptyDocument : InputError {
    explicit EmptyDocument(const std::string& id)
        : InputError("document '" + id + "' has no keywords after preprocessing") {}
};

// Lowercased maximal runs of ASCII alphanumerics; everything else separates.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (c < 0x80 && (std::isalnum(c) != 0)) {
            cur += static_cast<char>(std::tolower(c));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

inline std::vector<std::string> remove_stopwords(
    const std::vector<std::string>& tokens,
    const std::unordered_set<std::string>& stopwords) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!stopwords.contains(t)) out.push_back(t);
    return out;
}

inline std::vector<std::string> apply_allowlist(
    const std::vector<std::string>& tokens,
    const std::optional<std::unordered_set<std::string>>& allowlist) {
    if (!allowlist) return tokens;
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        if (allowlist->contains(t)) out.push_back(t);
    return out;
}

inline ProcessedDocument preprocess_document(const RawDocument& doc,
                                             const PreprocessConfig& cfg) {
    std::vector<std::string> tokens =
        apply_allowlist(remove_stopwords(tokenize(doc.text), cfg.stopwords),
                        cfg.allowlist);
    ProcessedDocument out{doc.id, {}};
    out.keywords.reserve(tokens.size());
    for (auto& t : tokens) {
        if (!cfg.stemming_enabled) {
            out.keywords.push_back(std::move(t));
            continue;
        }
        if (auto it = cfg.canonical.find(t); it != cfg.canonical.end()) {
            out.keywords.push_back(it->second);
            continue;
        }
        std::string stem = porter_stem(t);
        if (auto it = cfg.canonical.find(stem); it != cfg.canonical.end())
            out.keywords.push_back(it->second);
        else
            out.keywords.push_back(std::move(stem));
    }
    if (out.keywords.empty()) throw EmptyDocument(doc.id);
    return out;
}

}  // namespace fpcluster
