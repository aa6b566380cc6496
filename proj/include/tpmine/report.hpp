#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpmine/config.hpp"
#include "tpmine/dataset.hpp"
#include "tpmine/fraction.hpp"
#include "tpmine/frequent.hpp"
#include "tpmine/transitional.hpp"

namespace tpmine {

// Self-contained, label-based view of a mining run. It does not reference the
// database, so it can be rebuilt from its own JSON rendering.

struct ReportMeta {
  std::string algorithm;
  Fraction support_threshold;
  Fraction transition_threshold;
  Fraction range_low;
  Fraction range_high;
  std::optional<Window> window;
  std::size_t transactions = 0;
  std::size_t min_count = 0;
  std::size_t frequent_count = 0;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
  double elapsed_ms = 0.0;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct ReportPattern {
  std::vector<std::string> items;
  std::size_t support = 0;

  friend bool operator==(const ReportPattern&, const ReportPattern&) = default;
};

struct ReportMilestone {
  std::size_t occurrence = 0;
  std::size_t position = 0;
  std::string timestamp;  // ISO form
  std::string label;      // e.g. "aug2006"
  Fraction milestone_pct;
  Fraction sup_before;
  Fraction sup_after;
  Fraction ratio;

  /// "aug2006(62.5%), 60.000 %"
  std::string display() const;

  friend bool operator==(const ReportMilestone&, const ReportMilestone&) = default;
};

struct ReportTransitional {
  std::vector<std::string> items;
  std::vector<ReportMilestone> milestones;

  friend bool operator==(const ReportTransitional&, const ReportTransitional&) = default;
};

struct Report {
  ReportMeta meta;
  std::vector<ReportPattern> frequent;
  std::vector<ReportTransitional> positive;
  std::vector<ReportTransitional> negative;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs both mining phases and packages the result.
Report run_pipeline(const TransactionDatabase& db, const MiningConfig& config);

Report make_report(const TransactionDatabase& db, const MiningConfig& config,
                   std::span<const FrequentPattern> frequent, const TransitionalResult& result,
                   double elapsed_ms);

std::string render_text(const Report& report);
std::string render_json(const Report& report);
/// Inverse of render_json. Throws std::invalid_argument on malformed input.
Report parse_json_report(std::string_view json);

/// One line of a TP-Mine versus ETP-Mine comparison at a given minimum count.
struct ComparisonRow {
  std::size_t min_sup = 0;
  std::size_t tp_count = 0;
  std::size_t etp_count = 0;
  bool identical = false;  // transitional outputs of both algorithms agree

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

/// For each absolute minimum count runs both algorithms with otherwise equal
/// settings taken from `base`.
std::vector<ComparisonRow> compare_algorithms(const TransactionDatabase& db,
                                              const MiningConfig& base,
                                              std::span<const std::size_t> min_sups);

std::string render_comparison_text(std::span<const ComparisonRow> rows);
std::string render_comparison_json(std::span<const ComparisonRow> rows);

}  // namespace tpmine
