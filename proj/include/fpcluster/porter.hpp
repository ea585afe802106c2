#pragma once

// Porter stemmer (1980), implemented from the published definition,
// steps 1a through 5b. Words of length <= 2 and tokens containing
// non-alphabetic characters are returned unchanged.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>

namespace fpcluster {

namespace porter_detail {

inline bool is_cons(std::string_view w, size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !is_cons(w, i - 1);
    return true;
}

// m in the [C](VC)^m[V] decomposition of the stem.
inline int measure(std::string_view stem) {
    int m = 0;
    bool prev_vowel = false;
    for (size_t i = 0; i < stem.size(); ++i) {
        bool vowel = !is_cons(stem, i);
        if (!vowel && prev_vowel) ++m;
        prev_vowel = vowel;
    }
    return m;
}

inline bool contains_vowel(std::string_view stem) {
    for (size_t i = 0; i < stem.size(); ++i)
        if (!is_cons(stem, i)) return true;
    return false;
}

inline bool ends_double_cons(std::string_view w) {
    size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// *o condition: ends cvc where the final consonant is not w, x or y.
inline bool ends_cvc(std::string_view w) {
    size_t n = w.size();
    if (n < 3) return false;
    if (!is_cons(w, n - 3) || is_cons(w, n - 2) || !is_cons(w, n - 1)) return false;
    char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

inline bool ends_with(std::string_view w, std::string_view suf) {
    return w.size() >= suf.size() && w.substr(w.size() - suf.size()) == suf;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest matching suffix wins; its measure condition gates the rewrite but a
// failed condition still ends the step.
template <size_t N>
std::string replace_longest(std::string str, const std::array<Rule, N>& rules,
                            int min_measure) {
    std::string_view w = str;
    const Rule* best = nullptr;
    for (const Rule& r : rules)
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
            best = &r;
    if (!best) return str;
    std::string_view stem = w.substr(0, w.size() - best->suffix.size());
    if (measure(stem) <= min_measure) return str;
    std::string out(stem);
    out += best->replacement;
    return out;
}

inline std::string step1a(std::string w) {
    if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
    if (ends_with(w, "ies")) return w.substr(0, w.size() - 2);
    if (ends_with(w, "ss")) return w;
    if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
    return w;
}

inline std::string step1b(std::string w) {
    if (ends_with(w, "eed")) {
        std::string_view stem = std::string_view(w).substr(0, w.size() - 3);
        if (measure(stem) > 0) return w.substr(0, w.size() - 1);
        return w;
    }
    std::string hit;
    if (ends_with(w, "ed") && contains_vowel(std::string_view(w).substr(0, w.size() - 2)))
        hit = w.substr(0, w.size() - 2);
    else if (ends_with(w, "ing") && contains_vowel(std::string_view(w).substr(0, w.size() - 3)))
        hit = w.substr(0, w.size() - 3);
    else
        return w;
    if (ends_with(hit, "at") || ends_with(hit, "bl") || ends_with(hit, "iz"))
        return hit + "e";
    if (ends_double_cons(hit) && hit.back() != 'l' && hit.back() != 's' && hit.back() != 'z')
        return hit.substr(0, hit.size() - 1);
    if (measure(hit) == 1 && ends_cvc(hit)) return hit + "e";
    return hit;
}

inline std::string step1c(std::string w) {
    if (ends_with(w, "y") && contains_vowel(std::string_view(w).substr(0, w.size() - 1)))
        w.back() = 'i';
    return w;
}

inline constexpr std::array<Rule, 20> kStep2{{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
    {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
}};

inline constexpr std::array<Rule, 7> kStep3{{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

inline constexpr std::array<std::string_view, 19> kStep4{
    "al",   "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
    "ent",  "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
};

inline std::string step4(std::string w) {
    std::string_view best;
    for (std::string_view suf : kStep4)
        if (ends_with(w, suf) && suf.size() > best.size()) best = suf;
    if (best.empty()) return w;
    std::string_view stem = std::string_view(w).substr(0, w.size() - best.size());
    if (measure(stem) > 1) {
        if (best == "ion" && !(ends_with(stem, "s") || ends_with(stem, "t"))) return w;
        return std::string(stem);
    }
    return w;
}

inline std::string step5a(std::string w) {
    if (ends_with(w, "e")) {
        std::string_view stem = std::string_view(w).substr(0, w.size() - 1);
        int m = measure(stem);
        if (m > 1 || (m == 1 && !ends_cvc(stem))) return std::string(stem);
    }
    return w;
}

inline std::string step5b(std::string w) {
    if (measure(w) > 1 && ends_double_cons(w) && w.back() == 'l')
        return w.substr(0, w.size() - 1);
    return w;
}

}  // namespace porter_detail

inline std::string porter_stem(std::string_view token) {
    using namespace porter_detail;
    if (token.size() <= 2) return std::string(token);
    if (!std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; }))
        return std::string(token);
    std::string w(token);
    w = step1a(std::move(w));
    w = step1b(std::move(w));
    w = step1c(std::move(w));
    w = replace_longest(std::move(w), kStep2, 0);
    w = replace_longest(std::move(w), kStep3, 0);
    w = step4(std::move(w));
    w = step5a(std::move(w));
    w = step5b(std::move(w));
    return w;
}

}  // namespace fpcluster
