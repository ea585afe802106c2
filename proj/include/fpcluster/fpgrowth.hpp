#pragma once

// FP-growth over the transposed term-document matrix: terms act as
// transactions, documents as items. Mines the complete frequent itemset
// collection, then reduces it to maximal sets for cluster seeding.

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpcluster/corpus.hpp"

namespace fpcluster {

struct TransactionDB {
    std::vector<std::vector<int>> transactions;  // duplicate-free, ascending
    std::vector<std::string> item_names;         // item index -> id

    int num_items() const { return static_cast<int>(item_names.size()); }
};

struct Itemset {
    std::vector<int> items;  // ascending item indices
    int support = 0;

    friend bool operator==(const Itemset&, const Itemset&) = default;
};

// One transaction per term in vocabulary order; a document is a member iff
// its count is nonzero.
inline TransactionDB transpose_to_transactions(const TermDocumentMatrix& tdm) {
    TransactionDB db;
    db.item_names = tdm.doc_ids;
    db.transactions.reserve(tdm.num_terms());
    for (int t = 0; t < tdm.num_terms(); ++t) {
        std::vector<int> txn;
        for (int d = 0; d < tdm.num_docs(); ++d)
            if (tdm.counts[t][d] >= 1) txn.push_back(d);
        db.transactions.push_back(std::move(txn));
    }
    return db;
}

struct FPTree {
    struct Node {
        int item;
        int count;
        Node* parent;
        Node* link = nullptr;  // next node holding the same item
        std::unordered_map<int, std::unique_ptr<Node>> children;
    };

    struct HeaderEntry {
        int item;
        int support;
        Node* head = nullptr;
        Node* tail = nullptr;
    };

    std::unique_ptr<Node> root;
    std::vector<HeaderEntry> header;        // descending support, ties ascending item
    std::unordered_map<int, int> item_rank; // item -> header position

    bool empty() const { return root->children.empty(); }
};

namespace fpgrowth_detail {

inline void insert_transaction(FPTree& tree, const std::vector<int>& items, int count) {
    FPTree::Node* cur = tree.root.get();
    for (int item : items) {
        auto it = cur->children.find(item);
        if (it != cur->children.end()) {
            it->second->count += count;
            cur = it->second.get();
            continue;
        }
        auto node = std::make_unique<FPTree::Node>(FPTree::Node{item, count, cur});
        FPTree::Node* raw = node.get();
        cur->children.emplace(item, std::move(node));
        auto& entry = tree.header[tree.item_rank.at(item)];
        if (entry.tail)
            entry.tail->link = raw;
        else
            entry.head = raw;
        entry.tail = raw;
        cur = raw;
    }
}

// Weighted transactions enable conditional-tree construction to share the code.
inline FPTree build_tree(const std::vector<std::pair<std::vector<int>, int>>& txns,
                         int min_sup) {
    std::map<int, int> support;
    for (const auto& [items, count] : txns)
        for (int item : items) support[item] += count;

    FPTree tree;
    tree.root = std::make_unique<FPTree::Node>(FPTree::Node{-1, 0, nullptr});
    for (const auto& [item, sup] : support)
        if (sup >= min_sup) tree.header.push_back({item, sup});
    std::stable_sort(tree.header.begin(), tree.header.end(),
                     [](const FPTree::HeaderEntry& a, const FPTree::HeaderEntry& b) {
                         if (a.support != b.support) return a.support > b.support;
                         return a.item < b.item;
                     });
    for (size_t i = 0; i < tree.header.size(); ++i)
        tree.item_rank[tree.header[i].item] = static_cast<int>(i);

    for (const auto& [items, count] : txns) {
        std::vector<int> frequent;
        for (int item : items)
            if (tree.item_rank.contains(item)) frequent.push_back(item);
        std::sort(frequent.begin(), frequent.end(), [&](int a, int b) {
            return tree.item_rank.at(a) < tree.item_rank.at(b);
        });
        if (!frequent.empty()) insert_transaction(tree, frequent, count);
    }
    return tree;
}

// True when every node has at most one child (the tree is one path).
inline bool single_path(const FPTree& tree, std::vector<const FPTree::Node*>& path) {
    path.clear();
    const FPTree::Node* cur = tree.root.get();
    while (!cur->children.empty()) {
        if (cur->children.size() > 1) return false;
        cur = cur->children.begin()->second.get();
        path.push_back(cur);
    }
    return true;
}

inline void mine(const FPTree& tree, int min_sup, bool single_prefix_opt,
                 std::vector<int>& suffix, std::vector<Itemset>& out) {
    if (single_prefix_opt) {
        std::vector<const FPTree::Node*> path;
        if (single_path(tree, path)) {
            // Every nonempty node combination joined with the suffix is
            // frequent with the minimum count along the combination.
            size_t n = path.size();
            for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
                Itemset set;
                set.support = std::numeric_limits<int>::max();
                for (size_t i = 0; i < n; ++i)
                    if (mask & (size_t{1} << i)) {
                        set.items.push_back(path[i]->item);
                        set.support = std::min(set.support, path[i]->count);
                    }
                set.items.insert(set.items.end(), suffix.begin(), suffix.end());
                std::sort(set.items.begin(), set.items.end());
                out.push_back(std::move(set));
            }
            return;
        }
    }
    for (auto it = tree.header.rbegin(); it != tree.header.rend(); ++it) {
        Itemset beta;
        beta.items = suffix;
        beta.items.push_back(it->item);
        std::sort(beta.items.begin(), beta.items.end());
        beta.support = it->support;
        out.push_back(beta);

        std::vector<std::pair<std::vector<int>, int>> pattern_base;
        for (const FPTree::Node* node = it->head; node; node = node->link) {
            std::vector<int> prefix;
            for (const FPTree::Node* p = node->parent; p->parent; p = p->parent)
                prefix.push_back(p->item);
            if (!prefix.empty())
                pattern_base.emplace_back(std::move(prefix), node->count);
        }
        if (pattern_base.empty()) continue;
        FPTree cond = build_tree(pattern_base, min_sup);
        if (cond.empty()) continue;
        std::vector<int> new_suffix = suffix;
        new_suffix.push_back(it->item);
        mine(cond, min_sup, single_prefix_opt, new_suffix, out);
    }
}

inline void sort_itemsets(std::vector<Itemset>& sets) {
    std::sort(sets.begin(), sets.end(), [](const Itemset& a, const Itemset& b) {
        if (a.items.size() != b.items.size()) return a.items.size() > b.items.size();
        return a.items < b.items;
    });
}

}  // namespace fpgrowth_detail

inline FPTree build_fptree(const TransactionDB& db, int min_sup) {
    std::vector<std::pair<std::vector<int>, int>> txns;
    txns.reserve(db.transactions.size());
    for (const auto& t : db.transactions) txns.emplace_back(t, 1);
    return fpgrowth_detail::build_tree(txns, min_sup);
}

// Complete frequent itemset collection with exact supports, ordered by size
// descending then ascending item indices.
inline std::vector<Itemset> fp_growth(const FPTree& tree, int min_sup,
                                      bool single_prefix_opt = true) {
    std::vector<Itemset> out;
    std::vector<int> suffix;
    fpgrowth_detail::mine(tree, min_sup, single_prefix_opt, suffix, out);
    fpgrowth_detail::sort_itemsets(out);
    return out;
}

// Maximal frequent sets: no proper frequent superset. Singletons are dropped
// whenever a multi-item maximal set exists; on corpora where every maximal
// set is a singleton they are kept (degenerate seeding).
inline std::vector<Itemset> maximal_filter(const std::vector<Itemset>& patterns) {
    std::vector<Itemset> maximal;
    for (const auto& p : patterns) {
        bool has_superset = false;
        for (const auto& q : patterns) {
            if (q.items.size() <= p.items.size()) continue;
            if (std::includes(q.items.begin(), q.items.end(),
                              p.items.begin(), p.items.end())) {
                has_superset = true;
                break;
            }
        }
        if (!has_superset) maximal.push_back(p);
    }
    bool any_multi = std::any_of(maximal.begin(), maximal.end(),
                                 [](const Itemset& s) { return s.items.size() > 1; });
    if (any_multi)
        std::erase_if(maximal, [](const Itemset& s) { return s.items.size() == 1; });
    fpgrowth_detail::sort_itemsets(maximal);
    return maximal;
}

// Support values at which the maximal-set count changes, as
// (min_sup, count) pairs; diagnostic for choosing min_sup.
inline std::vector<std::pair<int, int>> support_spectrum(const TransactionDB& db) {
    int max_sup = 0;
    std::unordered_map<int, int> freq;
    for (const auto& t : db.transactions)
        for (int item : t) max_sup = std::max(max_sup, ++freq[item]);
    std::vector<std::pair<int, int>> spectrum;
    for (int ms = 1; ms <= max_sup; ++ms) {
        FPTree tree = build_fptree(db, ms);
        int count = static_cast<int>(maximal_filter(fp_growth(tree, ms)).size());
        if (spectrum.empty() || spectrum.back().second != count)
            spectrum.emplace_back(ms, count);
    }
    return spectrum;
}

// One transaction per line, space-separated item ids; item indices assigned
// by first appearance.
inline TransactionDB parse_transactions(std::istream& is) {
    TransactionDB db;
    std::unordered_map<std::string, int> index;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> txn;
        std::string id;
        while (ls >> id) {
            auto [it, fresh] = index.emplace(id, static_cast<int>(db.item_names.size()));
            if (fresh) db.item_names.push_back(id);
            if (std::find(txn.begin(), txn.end(), it->second) == txn.end())
                txn.push_back(it->second);
        }
        std::sort(txn.begin(), txn.end());
        db.transactions.push_back(std::move(txn));
    }
    return db;
}

inline void write_transactions(const TransactionDB& db, std::ostream& os) {
    for (const auto& txn : db.transactions) {
        for (size_t i = 0; i < txn.size(); ++i)
            os << (i ? " " : "") << db.item_names[txn[i]];
        os << '\n';
    }
}

}  // namespace fpcluster
