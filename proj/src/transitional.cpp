#include "tpmine/transitional.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>

namespace tpmine {

std::vector<Position> occurrence_positions(const TransactionDatabase& db, const Itemset& x) {
  if (x.empty()) throw std::invalid_argument("occurrence_positions: empty itemset");
  auto first = db.positions_of(x[0]);
  std::vector<Position> acc(first.begin(), first.end());
  std::vector<Position> next;
  for (std::size_t i = 1; i < x.size() && !acc.empty(); ++i) {
    auto other = db.positions_of(x[i]);
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    acc.swap(next);
  }
  return acc;
}

MilestonePoint make_milestone(const TransactionDatabase& db, Position position,
                              std::size_t occurrence, std::size_t cover) {
  const auto n = static_cast<std::int64_t>(db.size());
  const auto rho = static_cast<std::int64_t>(position);
  const auto i = static_cast<std::int64_t>(occurrence);

  MilestonePoint m;
  m.occurrence = occurrence;
  m.position = position;
  m.milestone = Fraction(rho, n);
  m.sup_before = Fraction(i, rho);
  m.sup_after = rho < n ? Fraction(static_cast<std::int64_t>(cover) - i, n - rho) : Fraction(0);
  m.ratio = (m.sup_after - m.sup_before) / std::max(m.sup_after, m.sup_before);
  m.timestamp = db.at(position).timestamp;
  return m;
}

MilestonePoint milestone_stats(const TransactionDatabase& db, const Itemset& x,
                               std::size_t occurrence) {
  auto positions = occurrence_positions(db, x);
  if (occurrence < 1 || occurrence > positions.size()) {
    throw std::out_of_range("milestone_stats: occurrence " + std::to_string(occurrence) +
                            " outside 1.." + std::to_string(positions.size()));
  }
  return make_milestone(db, positions[occurrence - 1], occurrence, positions.size());
}

std::vector<std::size_t> initial_counts(const TransactionDatabase& db,
                                        std::span<const FrequentPattern> patterns,
                                        const MilestoneRange& range) {
  auto window = window_positions(db, range);
  const Position end = window ? window->lo : db.size() + 1;
  std::vector<std::size_t> counts(patterns.size(), 0);
  for (Position p = 1; p < end; ++p) {
    const auto& items = db.at(p).items;
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      if (patterns[k].itemset.is_subset_of(items)) ++counts[k];
    }
  }
  return counts;
}

namespace {

struct PatternState {
  std::size_t count = 0;
  Fraction max_tran;
  Fraction min_tran;
  bool positive = false;
  bool negative = false;
  std::vector<MilestonePoint> ascending;
  std::vector<MilestonePoint> descending;
};

// Forward scan over the window for one slice of patterns and their states.
void scan_slice(const TransactionDatabase& db, std::span<const FrequentPattern> patterns,
                const MiningConfig& config, const Window& window,
                std::span<PatternState> states) {
  const Fraction& ts = config.support_threshold;
  const Fraction& tt = config.transition_threshold;
  const Fraction neg_tt = -tt;

  for (Position p = window.lo; p <= window.hi; ++p) {
    const auto& items = db.at(p).items;
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      if (!patterns[k].itemset.is_subset_of(items)) continue;
      auto& st = states[k];
      ++st.count;
      auto m = make_milestone(db, p, st.count, patterns[k].support);
      if (!(m.sup_before >= ts && m.sup_after >= ts)) continue;

      if (m.ratio >= tt) {
        st.positive = true;
        if (m.ratio > st.max_tran) {
          st.max_tran = m.ratio;
          st.ascending.assign(1, std::move(m));
        } else if (m.ratio == st.max_tran) {
          st.ascending.push_back(std::move(m));
        }
      } else if (m.ratio <= neg_tt) {
        st.negative = true;
        if (m.ratio < st.min_tran) {
          st.min_tran = m.ratio;
          st.descending.assign(1, std::move(m));
        } else if (m.ratio == st.min_tran) {
          st.descending.push_back(std::move(m));
        }
      }
    }
  }
}

}  // namespace

TransitionalResult mine_transitional(const TransactionDatabase& db,
                                     std::span<const FrequentPattern> patterns,
                                     const MiningConfig& config) {
  TransitionalResult result;
  auto window = window_positions(db, config.range);
  if (!window || patterns.empty()) return result;

  auto counts = initial_counts(db, patterns, config.range);
  std::vector<PatternState> states(patterns.size());
  for (std::size_t k = 0; k < patterns.size(); ++k) states[k].count = counts[k];

  const std::size_t workers = std::min(std::max<std::size_t>(config.threads, 1), patterns.size());
  if (workers == 1) {
    scan_slice(db, patterns, config, *window, states);
  } else {
    const std::size_t chunk = (patterns.size() + workers - 1) / workers;
    std::vector<std::jthread> pool;
    for (std::size_t begin = 0; begin < patterns.size(); begin += chunk) {
      const std::size_t len = std::min(chunk, patterns.size() - begin);
      pool.emplace_back([&, begin, len] {
        scan_slice(db, patterns.subspan(begin, len), config, *window,
                   std::span<PatternState>(states).subspan(begin, len));
      });
    }
  }

  for (std::size_t k = 0; k < patterns.size(); ++k) {
    auto& st = states[k];
    if (st.positive) {
      result.positives.push_back(
          {patterns[k].itemset, TransitionKind::positive, std::move(st.ascending)});
    }
    if (st.negative) {
      result.negatives.push_back(
          {patterns[k].itemset, TransitionKind::negative, std::move(st.descending)});
    }
  }
  auto by_itemset = [](const TransitionalPattern& a, const TransitionalPattern& b) {
    return a.itemset < b.itemset;
  };
  std::sort(result.positives.begin(), result.positives.end(), by_itemset);
  std::sort(result.negatives.begin(), result.negatives.end(), by_itemset);
  return result;
}

}  // namespace tpmine
