#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tpmine/config.hpp"
#include "tpmine/dataset.hpp"
#include "tpmine/fraction.hpp"
#include "tpmine/frequent.hpp"

namespace tpmine {

/// Statistics of one occurrence of a pattern, all kept exact.
struct MilestonePoint {
  std::size_t occurrence = 0;  // i, 1-based rank among the transactions containing the pattern
  Position position = 0;       // position of the i-th containing transaction
  Fraction milestone;          // position / |D|; multiply by 100 for a percentage
  Fraction sup_before;         // i / position
  Fraction sup_after;          // (cover - i) / (|D| - position), 0 at the last position
  Fraction ratio;              // (after - before) / max(after, before)
  Timestamp timestamp;

  Fraction milestone_percent() const { return milestone * Fraction(100); }
  std::string timestamp_label() const { return timestamp.label(); }

  friend bool operator==(const MilestonePoint&, const MilestonePoint&) = default;
};

enum class TransitionKind { positive, negative };

struct TransitionalPattern {
  Itemset itemset;
  TransitionKind kind = TransitionKind::positive;
  /// Significant milestones: all in-window qualifying milestones that share the
  /// extreme ratio, in ascending position order.
  std::vector<MilestonePoint> milestones;

  friend bool operator==(const TransitionalPattern&, const TransitionalPattern&) = default;
};

struct TransitionalResult {
  std::vector<TransitionalPattern> positives;
  std::vector<TransitionalPattern> negatives;

  friend bool operator==(const TransitionalResult&, const TransitionalResult&) = default;
};

/// Ascending positions of every transaction containing `x`.
std::vector<Position> occurrence_positions(const TransactionDatabase& db, const Itemset& x);

/// Builds the milestone record for the `occurrence`-th appearance of a
/// pattern with total cover `cover` at `position`.
MilestonePoint make_milestone(const TransactionDatabase& db, Position position,
                              std::size_t occurrence, std::size_t cover);

/// Throws std::out_of_range unless 1 <= occurrence <= cover_count(db, x).
MilestonePoint milestone_stats(const TransactionDatabase& db, const Itemset& x,
                               std::size_t occurrence);

/// Per-pattern counts over the transactions strictly before the window.
/// With an empty window every count covers the whole database.
std::vector<std::size_t> initial_counts(const TransactionDatabase& db,
                                        std::span<const FrequentPattern> patterns,
                                        const MilestoneRange& range);

/// Second phase of transitional mining: one forward scan over the window,
/// classifying patterns as positive/negative transitional and collecting their
/// significant frequency-ascending/descending milestones. Both result lists are
/// ordered by (length, lexicographic itemset).
TransitionalResult mine_transitional(const TransactionDatabase& db,
                                     std::span<const FrequentPattern> patterns,
                                     const MiningConfig& config);

}  // namespace tpmine
