#include "rulestrata/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace rulestrata {

const Item& ItemDictionary::item(ItemId id) const {
    if (id >= items_.size())
        throw UnknownItem("item id " + std::to_string(id) + " out of range");
    return items_[id];
}

std::optional<ItemId> ItemDictionary::find(const std::string& variable,
                                           const std::string& category) const {
    auto it = index_.find({variable, category});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t ItemDictionary::variable_of(ItemId id) const {
    if (id >= var_of_.size())
        throw UnknownItem("item id " + std::to_string(id) + " out of range");
    return var_of_[id];
}

std::optional<std::size_t> ItemDictionary::variable_index(const std::string& variable) const {
    auto it = std::lower_bound(variable_names_.begin(), variable_names_.end(), variable);
    if (it == variable_names_.end() || *it != variable) return std::nullopt;
    return static_cast<std::size_t>(it - variable_names_.begin());
}

const std::vector<ItemId>& ItemDictionary::items_of_variable(std::size_t variable_index) const {
    return variable_items_.at(variable_index);
}

std::string ItemDictionary::label(ItemId id) const {
    const Item& it = item(id);
    return it.variable + "=" + it.category;
}

ItemDictionary ItemDictionary::from_pairs(std::vector<std::pair<std::string, std::string>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    ItemDictionary dict;
    for (const auto& [var, cat] : pairs) {
        if (dict.variable_names_.empty() || dict.variable_names_.back() != var) {
            dict.variable_names_.push_back(var);
            dict.variable_items_.emplace_back();
        }
        ItemId id = static_cast<ItemId>(dict.items_.size());
        dict.items_.push_back(Item{id, var, cat});
        dict.var_of_.push_back(static_cast<std::uint32_t>(dict.variable_names_.size() - 1));
        dict.variable_items_.back().push_back(id);
        dict.index_.emplace(std::make_pair(var, cat), id);
    }
    return dict;
}

ItemDictionary build_dictionary(std::span<const Record> records,
                                std::span<const std::string> variables) {
    if (records.empty()) throw EmptyInput("no records to build a dictionary from");

    std::set<std::pair<std::string, std::string>> pairs;
    for (const Record& rec : records) {
        for (const std::string& var : variables) {
            auto it = rec.values.find(var);
            if (it == rec.values.end())
                throw SchemaViolation("record '" + rec.id + "' is missing variable '" + var + "'");
            if (it->second.empty())
                throw SchemaViolation("record '" + rec.id + "' has an empty category for variable '" +
                                      var + "'");
            pairs.emplace(var, it->second);
        }
    }
    return ItemDictionary::from_pairs(
        std::vector<std::pair<std::string, std::string>>(pairs.begin(), pairs.end()));
}

Transaction encode_record(const Record& record, const ItemDictionary& dict) {
    Transaction tx;
    tx.record_id = record.id;
    tx.items.reserve(dict.variable_names().size());
    for (const std::string& var : dict.variable_names()) {
        auto it = record.values.find(var);
        if (it == record.values.end())
            throw SchemaViolation("record '" + record.id + "' is missing variable '" + var + "'");
        auto id = dict.find(var, it->second);
        if (!id)
            throw UnknownItem("unknown item (" + var + ", " + it->second + ") in record '" +
                              record.id + "'");
        tx.items.push_back(*id);
    }
    std::sort(tx.items.begin(), tx.items.end());
    return tx;
}

Record decode_record(const Transaction& tx, const ItemDictionary& dict) {
    Record rec;
    rec.id = tx.record_id;
    for (ItemId id : tx.items) {
        const Item& item = dict.item(id);
        rec.values[item.variable] = item.category;
    }
    return rec;
}

namespace {

bool transaction_contains(const Itemset& sorted_items, std::span<const ItemId> itemset) {
    return std::includes(sorted_items.begin(), sorted_items.end(), itemset.begin(), itemset.end());
}

} // namespace

ItemsetSupport support_count(const TransactionDatabase& db, std::span<const ItemId> itemset) {
    if (db.n() == 0) throw EmptyDatabase();

    Itemset sorted(itemset.begin(), itemset.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        db.dictionary.item(sorted[i]); // validates the id
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw UnknownItem("duplicate item id " + std::to_string(sorted[i]) + " in itemset");
    }

    std::uint64_t count = 0;
    for (const Transaction& tx : db.transactions)
        if (transaction_contains(tx.items, sorted)) ++count;

    ItemsetSupport result;
    result.itemset = std::move(sorted);
    result.count = count;
    result.support = static_cast<double>(count) / static_cast<double>(db.n());
    return result;
}

std::vector<std::pair<ItemId, std::uint64_t>> item_frequencies(const TransactionDatabase& db) {
    std::vector<std::pair<ItemId, std::uint64_t>> freq;
    freq.reserve(db.dictionary.size());
    for (std::size_t i = 0; i < db.dictionary.size(); ++i)
        freq.emplace_back(static_cast<ItemId>(i), 0);
    for (const Transaction& tx : db.transactions)
        for (ItemId id : tx.items) ++freq[id].second;
    std::sort(freq.begin(), freq.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return freq;
}

std::uint64_t min_count_for_support(double min_support, std::uint64_t n) {
    if (min_support <= 0.0 || n == 0) return 0;
    double target = min_support * static_cast<double>(n);
    auto c = static_cast<std::uint64_t>(std::ceil(target));
    if (c > n) return n + 1; // nothing can qualify when min_support > 1
    while (c > 0 && static_cast<double>(c - 1) / static_cast<double>(n) >= min_support) --c;
    while (c <= n && static_cast<double>(c) / static_cast<double>(n) < min_support) ++c;
    return c;
}

ItemBitsets::ItemBitsets(const TransactionDatabase& db)
    : n_(db.n()), words_((db.n() + 63) / 64), bits_(db.dictionary.size()) {
    for (auto& b : bits_) b.assign(words_, 0);
    for (std::size_t row = 0; row < db.transactions.size(); ++row)
        for (ItemId id : db.transactions[row].items)
            bits_[id][row / 64] |= (std::uint64_t{1} << (row % 64));
}

std::span<const std::uint64_t> ItemBitsets::bits(ItemId id) const {
    return std::span<const std::uint64_t>(bits_.at(id));
}

std::uint64_t ItemBitsets::count(std::span<const ItemId> itemset) const {
    if (itemset.empty()) return n_;
    if (itemset.size() == 1) return count_words(bits(itemset[0]));
    std::vector<std::uint64_t> acc(bits(itemset[0]).begin(), bits(itemset[0]).end());
    for (std::size_t i = 1; i + 1 < itemset.size(); ++i)
        and_into(acc, bits(itemset[i]), acc);
    return count_and(acc, bits(itemset[itemset.size() - 1]));
}

void ItemBitsets::and_into(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                           std::span<std::uint64_t> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

std::uint64_t ItemBitsets::count_and(std::span<const std::uint64_t> a,
                                     std::span<const std::uint64_t> b) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t ItemBitsets::count_words(std::span<const std::uint64_t> a) {
    std::uint64_t c = 0;
    for (std::uint64_t w : a) c += std::popcount(w);
    return c;
}

} // namespace rulestrata
