#include "tpmine/frequent.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace tpmine {

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::tp_mine ? "tp" : "etp";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "tp" || text == "tp-mine") return Algorithm::tp_mine;
  if (text == "etp" || text == "etp-mine") return Algorithm::etp_mine;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "' (expected tp|etp)");
}

void MiningConfig::validate() const {
  const Fraction zero(0), one(1);
  if (support_threshold <= zero || support_threshold > one) {
    throw std::invalid_argument("support threshold must be in (0, 1]");
  }
  if (transition_threshold <= zero || transition_threshold > one) {
    throw std::invalid_argument("transitional threshold must be in (0, 1]");
  }
  if (min_support_mode == MinSupportMode::absolute && absolute_min_count == 0) {
    throw std::invalid_argument("absolute minimum support count must be >= 1");
  }
  if (threads == 0) throw std::invalid_argument("threads must be >= 1");
}

std::size_t effective_min_count(const MiningConfig& config, std::size_t db_size) {
  if (config.min_support_mode == MinSupportMode::absolute) return config.absolute_min_count;
  auto count = (config.support_threshold * Fraction(static_cast<std::int64_t>(db_size))).ceil();
  return static_cast<std::size_t>(std::max<std::int64_t>(1, count));
}

Itemset seed_items(const TransactionDatabase& db, const MiningConfig& config) {
  if (config.algorithm == Algorithm::tp_mine) return db.item_universe();
  return items_in_window(db, config.range);
}

std::vector<Itemset> apriori_gen(std::span<const Itemset> input) {
  std::vector<Itemset> out;
  if (input.empty()) return out;
  const std::size_t k = input.front().size();
  std::vector<Itemset> level(input.begin(), input.end());
  std::sort(level.begin(), level.end());

  auto in_level = [&](const std::vector<ItemIndex>& items) {
    auto probe = Itemset::from_sorted(items);
    return std::binary_search(level.begin(), level.end(), probe);
  };

  std::vector<ItemIndex> subset;
  for (std::size_t a = 0; a < level.size(); ++a) {
    const auto& left = level[a];
    for (std::size_t b = a + 1; b < level.size(); ++b) {
      const auto& right = level[b];
      if (!std::equal(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(k - 1),
                      right.begin())) {
        break;  // sorted input: no later itemset shares left's prefix
      }
      std::vector<ItemIndex> joined(left.begin(), left.end());
      joined.push_back(right.back());

      // Subsets dropping one of the first k-1 items; the two dropping the
      // last two items are `left` and `right` themselves.
      bool keep = true;
      for (std::size_t skip = 0; skip + 2 <= k && keep; ++skip) {
        subset.clear();
        for (std::size_t i = 0; i < joined.size(); ++i) {
          if (i != skip) subset.push_back(joined[i]);
        }
        keep = in_level(subset);
      }
      if (keep) out.push_back(Itemset::from_sorted(std::move(joined)));
    }
  }
  return out;
}

namespace {

struct LevelEntry {
  Itemset itemset;
  std::vector<Position> cover;
};

std::vector<Position> intersect(const std::vector<Position>& a, const std::vector<Position>& b) {
  std::vector<Position> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

const LevelEntry* find_entry(const std::vector<LevelEntry>& level, const Itemset& key) {
  auto it = std::lower_bound(level.begin(), level.end(), key,
                             [](const LevelEntry& e, const Itemset& k) { return e.itemset < k; });
  return (it != level.end() && it->itemset == key) ? &*it : nullptr;
}

}  // namespace

std::vector<FrequentPattern> mine_frequent(const TransactionDatabase& db,
                                           const MiningConfig& config) {
  const std::size_t min_count = effective_min_count(config, db.size());
  std::vector<FrequentPattern> result;

  std::vector<LevelEntry> level;
  for (ItemIndex item : seed_items(db, config)) {
    auto postings = db.positions_of(item);
    if (postings.size() >= min_count) {
      level.push_back({Itemset{item}, std::vector<Position>(postings.begin(), postings.end())});
    }
  }

  while (!level.empty()) {
    for (const auto& e : level) result.push_back({e.itemset, e.cover.size()});

    std::vector<Itemset> keys;
    keys.reserve(level.size());
    for (const auto& e : level) keys.push_back(e.itemset);

    std::vector<LevelEntry> next;
    for (auto& candidate : apriori_gen(keys)) {
      // The candidate's cover is the intersection of the two joined parents.
      std::vector<ItemIndex> items(candidate.begin(), candidate.end());
      std::vector<ItemIndex> left(items.begin(), items.end() - 1);
      std::vector<ItemIndex> right(items.begin(), items.end() - 2);
      right.push_back(items.back());
      const auto* l = find_entry(level, Itemset::from_sorted(std::move(left)));
      const auto* r = find_entry(level, Itemset::from_sorted(std::move(right)));
      auto cover = intersect(l->cover, r->cover);
      if (cover.size() >= min_count) next.push_back({std::move(candidate), std::move(cover)});
    }
    level = std::move(next);
  }
  return result;
}

}  // namespace tpmine
