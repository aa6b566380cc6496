#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tpmine/fraction.hpp"

namespace tpmine {

/// Dense index of an item label inside one database. Indices are assigned in
/// lexicographic label order, so comparing indices compares labels.
using ItemIndex = std::uint32_t;

/// 1-based rank of a transaction in timestamp order.
using Position = std::size_t;

/// Sorted, duplicate-free collection of item indices.
class Itemset {
 public:
  Itemset() = default;
  /// Sorts and removes duplicates.
  explicit Itemset(std::vector<ItemIndex> items);
  Itemset(std::initializer_list<ItemIndex> items);

  /// Adopts `items` without re-sorting; caller guarantees strict ascending order.
  static Itemset from_sorted(std::vector<ItemIndex> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  ItemIndex operator[](std::size_t i) const { return items_[i]; }
  ItemIndex back() const { return items_.back(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::span<const ItemIndex> items() const { return items_; }

  /// True when every item of *this is also in `other`.
  bool is_subset_of(const Itemset& other) const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  /// Shorter itemsets first, then lexicographic. This is the output order of
  /// every pattern list in the library.
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b);

 private:
  std::vector<ItemIndex> items_;
};

/// Calendar timestamp at month or day granularity. A month-only value sorts
/// before every day inside that month.
struct Timestamp {
  int year = 0;
  unsigned month = 1;
  unsigned day = 0;  // 0 when the input gave only YYYY-MM

  /// Accepts `YYYY-MM` and `YYYY-MM-DD`.
  static Timestamp parse(std::string_view text);

  std::string iso() const;
  /// Lowercase month abbreviation followed by the year, e.g. "aug2006".
  std::string label() const;

  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

struct Transaction {
  std::string tid;
  Timestamp timestamp;
  Position position = 0;
  Itemset items;
};

/// One input record before positions are assigned.
struct RawTransaction {
  std::string tid;
  std::vector<std::string> items;
  Timestamp timestamp;
  std::size_t row = 0;  // source line number, 0 if not from a file
};

/// Error raised while reading transaction input. Carries the 1-based source
/// line number (0 when the failure is not tied to a single row).
class LoadError : public std::runtime_error {
 public:
  LoadError(std::size_t row, const std::string& message);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Inclusive percentage range [low, high] of milestones of interest.
class MilestoneRange {
 public:
  /// Throws std::invalid_argument unless 0 <= low < high <= 100.
  MilestoneRange(Fraction low_pct, Fraction high_pct);

  /// Parses "LOW:HIGH", e.g. "25:75" or "12.5:60".
  static MilestoneRange parse(std::string_view text);

  static MilestoneRange full() { return {Fraction(0), Fraction(100)}; }

  const Fraction& low_pct() const { return low_; }
  const Fraction& high_pct() const { return high_; }

  friend bool operator==(const MilestoneRange&, const MilestoneRange&) = default;

 private:
  Fraction low_;
  Fraction high_;
};

/// Positions [lo, hi] (inclusive) whose milestone percentage lies in a range.
struct Window {
  Position lo = 0;
  Position hi = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

/// Immutable, position-ordered transaction store.
///
/// Besides the horizontal (per-transaction) view, the database keeps, for
/// each item, the ascending list of positions containing it. Cover queries
/// intersect those lists. Safe for concurrent readers.
class TransactionDatabase {
 public:
  /// Sorts by (timestamp, input order), assigns positions 1..n, collapses
  /// duplicate items within a row. Throws LoadError on empty input, empty
  /// item lists, invalid labels or duplicate TIDs.
  static TransactionDatabase from_transactions(std::vector<RawTransaction> rows);

  std::size_t size() const { return transactions_.size(); }
  std::span<const Transaction> transactions() const { return transactions_; }
  /// 1-based access.
  const Transaction& at(Position position) const { return transactions_.at(position - 1); }

  std::size_t item_count() const { return labels_.size(); }
  const std::string& label(ItemIndex item) const { return labels_.at(item); }
  std::optional<ItemIndex> find_item(std::string_view label) const;
  /// Every item index, ascending.
  Itemset item_universe() const;

  /// Resolves labels to an itemset; nullopt if any label is unknown.
  std::optional<Itemset> itemset(std::span<const std::string> labels) const;
  std::optional<Itemset> itemset(std::initializer_list<std::string_view> labels) const;

  std::vector<std::string> labels(const Itemset& set) const;
  /// Comma-joined labels, e.g. "P1,P3,P4".
  std::string format(const Itemset& set) const;

  /// Ascending positions of transactions containing `item`.
  std::span<const Position> positions_of(ItemIndex item) const { return postings_.at(item); }

 private:
  std::vector<Transaction> transactions_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ItemIndex> index_;
  std::vector<std::vector<Position>> postings_;
};

/// Reads the transaction-CSV format: `tid,items,timestamp` per line, items
/// separated by ';'. A leading `tid,items,timestamp` header and blank lines
/// are skipped.
TransactionDatabase load_database(std::istream& in);
TransactionDatabase load_database(const std::filesystem::path& path);

std::size_t cover_count(const TransactionDatabase& db, const Itemset& x);
/// Label-based overload; labels outside the item universe give 0.
std::size_t cover_count(const TransactionDatabase& db, std::initializer_list<std::string_view> labels);

Fraction support_ratio(const TransactionDatabase& db, const Itemset& x);

std::optional<Window> window_positions(std::size_t db_size, const MilestoneRange& range);
inline std::optional<Window> window_positions(const TransactionDatabase& db,
                                              const MilestoneRange& range) {
  return window_positions(db.size(), range);
}

/// Union of the itemsets of all transactions inside the window.
Itemset items_in_window(const TransactionDatabase& db, const MilestoneRange& range);

}  // namespace tpmine
