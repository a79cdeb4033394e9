#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rulestrata/errors.hpp"

namespace rulestrata {

using ItemId = std::uint32_t;
using Itemset = std::vector<ItemId>;

/// One raw input record: an opaque id plus a variable -> category map.
struct Record {
    std::string id;
    std::map<std::string, std::string> values;
};

/// An item is one (variable, category) pair with a dense id.
struct Item {
    ItemId id = 0;
    std::string variable;
    std::string category;
};

/// Frozen bijection between (variable, category) pairs and dense item ids.
/// Ids are assigned in ascending lexicographic order of (variable, category).
class ItemDictionary {
public:
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    const Item& item(ItemId id) const;
    std::optional<ItemId> find(const std::string& variable, const std::string& category) const;

    // Dense index of the variable an item belongs to.
    std::uint32_t variable_of(ItemId id) const;

    const std::vector<std::string>& variable_names() const { return variable_names_; }
    std::optional<std::size_t> variable_index(const std::string& variable) const;
    const std::vector<ItemId>& items_of_variable(std::size_t variable_index) const;

    std::string label(ItemId id) const; // "variable=category"

    static ItemDictionary from_pairs(std::vector<std::pair<std::string, std::string>> pairs);

private:
    std::vector<Item> items_;
    std::vector<std::uint32_t> var_of_;
    std::vector<std::string> variable_names_;
    std::vector<std::vector<ItemId>> variable_items_;
    std::map<std::pair<std::string, std::string>, ItemId> index_;

    friend ItemDictionary build_dictionary(std::span<const Record>,
                                           std::span<const std::string>);
};

/// One encoded record: item ids sorted strictly ascending, one per variable.
struct Transaction {
    std::string record_id;
    Itemset items;
};

/// The encoded database T over the item universe held by the dictionary.
struct TransactionDatabase {
    ItemDictionary dictionary;
    std::vector<Transaction> transactions;

    std::uint64_t n() const { return transactions.size(); }
};

struct ItemsetSupport {
    Itemset itemset;
    std::uint64_t count = 0;
    double support = 0.0;
};

/// Builds the dictionary over exactly the distinct (variable, category) pairs
/// observed in `records` for the declared `variables`. Throws EmptyInput when
/// `records` is empty and SchemaViolation when a record lacks a declared
/// variable or carries an empty category.
ItemDictionary build_dictionary(std::span<const Record> records,
                                std::span<const std::string> variables);

/// Throws UnknownItem when a (variable, category) pair is absent from the
/// dictionary and SchemaViolation when the record lacks a dictionary variable.
Transaction encode_record(const Record& record, const ItemDictionary& dict);

Record decode_record(const Transaction& tx, const ItemDictionary& dict);

/// Exact support of `itemset`: number of transactions containing every id.
/// The empty itemset has count N. Throws EmptyDatabase when N = 0.
ItemsetSupport support_count(const TransactionDatabase& db, std::span<const ItemId> itemset);

/// One entry per dictionary item, descending by count, ties by id ascending.
std::vector<std::pair<ItemId, std::uint64_t>> item_frequencies(const TransactionDatabase& db);

/// Smallest count c with c/n >= min_support under double comparison.
std::uint64_t min_count_for_support(double min_support, std::uint64_t n);

/// Vertical bit-vector index: one fixed-width bitset per item over the
/// transactions. Counting an itemset is an AND + popcount over words.
class ItemBitsets {
public:
    explicit ItemBitsets(const TransactionDatabase& db);

    std::uint64_t transaction_count() const { return n_; }
    std::size_t word_count() const { return words_; }

    std::span<const std::uint64_t> bits(ItemId id) const;

    std::uint64_t count(std::span<const ItemId> itemset) const;

    // out = a & b
    static void and_into(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                         std::span<std::uint64_t> out);
    static std::uint64_t count_and(std::span<const std::uint64_t> a,
                                   std::span<const std::uint64_t> b);
    static std::uint64_t count_words(std::span<const std::uint64_t> a);

private:
    std::uint64_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> bits_;
};

} // namespace rulestrata
