#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tpmine/config.hpp"
#include "tpmine/dataset.hpp"

namespace tpmine {

/// A frequent itemset with its cover count over the whole database.
struct FrequentPattern {
  Itemset itemset;
  std::size_t support = 0;

  friend bool operator==(const FrequentPattern&, const FrequentPattern&) = default;
};

std::size_t effective_min_count(const MiningConfig& config, std::size_t db_size);

/// Candidate 1-itemsets: the whole item universe for TP-Mine, the items seen
/// inside the milestone window for ETP-Mine.
Itemset seed_items(const TransactionDatabase& db, const MiningConfig& config);

/// Apriori candidate generation. Joins itemsets sharing their first k-1 items
/// and drops any (k+1)-candidate that has a k-subset missing from the input.
/// Input must be equal-length, canonically ordered and duplicate-free.
std::vector<Itemset> apriori_gen(std::span<const Itemset> level);

/// Level-wise Apriori over the seed items. Supports are global counts over
/// the full database. Result is ordered by (length, lexicographic itemset).
std::vector<FrequentPattern> mine_frequent(const TransactionDatabase& db,
                                           const MiningConfig& config);

}  // namespace tpmine
