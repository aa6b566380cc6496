#pragma once

// The 16-transaction example database and the frequent/transitional pattern
// tables published for it (t_s = 0.05, t_t = 0.5, milestone range 25%..75%).

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpmine/dataset.hpp"

namespace tpmine::fixtures {

inline std::string data_path(std::string_view name) {
  return std::string(TPMINE_TEST_DATA_DIR) + "/" + std::string(name);
}

inline TransactionDatabase example_db() { return load_database(data_path("table1.csv")); }

inline std::string example_csv() {
  std::ifstream in(data_path("table1.csv"));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct PatternCount {
  const char* items;  // comma-separated labels
  std::size_t support;
};

/// All frequent patterns at minimum count 1 (87 entries).
inline const std::vector<PatternCount>& table2() {
  static const std::vector<PatternCount> rows = {
      {"P1", 15}, {"P2", 10}, {"P3", 10}, {"P4", 9}, {"P5", 8}, {"P6", 7}, {"P7", 1}, {"P8", 1},
      {"P1,P2", 10}, {"P1,P3", 10}, {"P1,P4", 8}, {"P1,P5", 7}, {"P1,P6", 6}, {"P1,P7", 1},
      {"P1,P8", 1}, {"P2,P3", 6}, {"P2,P4", 4}, {"P2,P5", 5}, {"P2,P6", 4}, {"P2,P7", 1},
      {"P2,P8", 1}, {"P3,P4", 5},
      {"P3,P5", 5}, {"P3,P6", 4}, {"P3,P7", 1}, {"P3,P8", 1}, {"P4,P5", 4}, {"P4,P6", 6},
      {"P5,P6", 3}, {"P6,P7", 1}, {"P1,P2,P3", 6}, {"P1,P2,P4", 4}, {"P1,P2,P5", 5},
      {"P1,P2,P6", 4}, {"P1,P2,P7", 1}, {"P1,P2,P8", 1}, {"P1,P3,P4", 5}, {"P1,P3,P5", 5},
      {"P1,P3,P6", 4}, {"P1,P3,P7", 1}, {"P1,P3,P8", 1}, {"P1,P4,P5", 3}, {"P1,P4,P6", 5},
      {"P1,P5,P6", 2},
      {"P1,P6,P7", 1}, {"P2,P3,P4", 2}, {"P2,P3,P5", 3}, {"P2,P3,P6", 3}, {"P2,P3,P7", 1},
      {"P2,P3,P8", 1}, {"P2,P4,P5", 2}, {"P2,P4,P6", 3}, {"P2,P5,P6", 2}, {"P2,P6,P7", 1},
      {"P3,P4,P5", 2}, {"P3,P4,P6", 3}, {"P3,P5,P6", 1}, {"P3,P6,P7", 1}, {"P4,P5,P6", 3},
      {"P1,P2,P3,P4", 2}, {"P1,P2,P3,P5", 3}, {"P1,P2,P3,P6", 3}, {"P1,P2,P3,P7", 1},
      {"P1,P2,P3,P8", 1}, {"P1,P2,P4,P5", 2}, {"P1,P2,P4,P6", 3},
      {"P1,P2,P5,P6", 2}, {"P1,P2,P6,P7", 1}, {"P1,P3,P4,P5", 2}, {"P1,P3,P4,P6", 3},
      {"P1,P3,P5,P6", 1}, {"P1,P3,P6,P7", 1}, {"P1,P4,P5,P6", 2}, {"P2,P3,P4,P5", 1},
      {"P2,P3,P4,P6", 2}, {"P2,P3,P5,P6", 1}, {"P2,P3,P6,P7", 1}, {"P2,P4,P5,P6", 2},
      {"P3,P4,P5,P6", 1}, {"P1,P2,P3,P4,P5", 1}, {"P1,P2,P3,P4,P6", 2}, {"P1,P2,P3,P5,P6", 1},
      {"P1,P2,P3,P6,P7", 1}, {"P1,P2,P4,P5,P6", 2}, {"P1,P3,P4,P5,P6", 1},
      {"P2,P3,P4,P5,P6", 1}, {"P1,P2,P3,P4,P5,P6", 1},
  };
  return rows;
}

/// Window-pruned frequent patterns (63 entries, no P7/P8).
inline const std::vector<PatternCount>& table5() {
  static const std::vector<PatternCount> rows = {
      {"P1", 15}, {"P2", 10}, {"P3", 10}, {"P4", 9}, {"P5", 8}, {"P6", 7}, {"P1,P2", 10},
      {"P1,P3", 10}, {"P1,P4", 8}, {"P1,P5", 7}, {"P1,P6", 6}, {"P2,P3", 6}, {"P2,P4", 4},
      {"P2,P5", 5}, {"P2,P6", 4}, {"P3,P4", 5}, {"P3,P5", 5}, {"P3,P6", 4}, {"P4,P5", 4},
      {"P4,P6", 6}, {"P5,P6", 3}, {"P1,P2,P3", 6}, {"P1,P2,P4", 4}, {"P1,P2,P5", 5},
      {"P1,P2,P6", 4}, {"P1,P3,P4", 5},
      {"P1,P3,P5", 5}, {"P1,P3,P6", 4}, {"P1,P4,P5", 3}, {"P1,P4,P6", 5}, {"P1,P5,P6", 2},
      {"P2,P3,P4", 2}, {"P2,P3,P5", 3}, {"P2,P3,P6", 3}, {"P2,P4,P5", 2}, {"P2,P4,P6", 3},
      {"P2,P5,P6", 2}, {"P3,P4,P5", 2}, {"P3,P4,P6", 3},
      {"P3,P5,P6", 1}, {"P4,P5,P6", 3}, {"P1,P2,P3,P4", 2}, {"P1,P2,P3,P5", 3},
      {"P1,P2,P3,P6", 3}, {"P1,P2,P4,P5", 2}, {"P1,P2,P4,P6", 3}, {"P1,P2,P5,P6", 2},
      {"P1,P3,P4,P5", 2}, {"P1,P3,P4,P6", 3}, {"P1,P3,P5,P6", 1}, {"P1,P4,P5,P6", 2},
      {"P2,P3,P4,P5", 1},
      {"P2,P3,P4,P6", 2}, {"P2,P3,P5,P6", 1}, {"P2,P4,P5,P6", 2}, {"P3,P4,P5,P6", 1},
      {"P1,P2,P3,P4,P5", 1}, {"P1,P2,P3,P4,P6", 2}, {"P1,P2,P3,P5,P6", 1},
      {"P1,P2,P4,P5,P6", 2}, {"P1,P3,P4,P5,P6", 1}, {"P2,P3,P4,P5,P6", 1},
      {"P1,P2,P3,P4,P5,P6", 1},
  };
  return rows;
}

struct MilestoneRow {
  const char* items;
  const char* milestone;  // "label(pct%), ratio %"
};

/// Positive transitional patterns and their ascending milestones (14).
inline const std::vector<MilestoneRow>& table3() {
  static const std::vector<MilestoneRow> rows = {
      {"P3", "aug2006(62.5%), 60.000 %"},        {"P4", "mar2006(31.25%), 72.500 %"},
      {"P6", "apr2006(37.5%), 72.222 %"},        {"P1,P3", "aug2006(62.5%), 60.000 %"},
      {"P1,P4", "mar2006(31.25%), 68.571 %"},    {"P1,P6", "apr2006(37.5%), 66.667 %"},
      {"P3,P4", "may2006(43.75%), 67.857 %"},    {"P3,P5", "aug2006(62.5%), 60.000 %"},
      {"P3,P6", "may2006(43.75%), 57.143 %"},    {"P4,P6", "apr2006(37.5%), 66.667 %"},
      {"P1,P3,P4", "may2006(43.75%), 67.857 %"}, {"P1,P3,P5", "aug2006(62.5%), 60.000 %"},
      {"P1,P3,P6", "may2006(43.75%), 57.143 %"}, {"P1,P4,P6", "apr2006(37.5%), 58.333 %"},
  };
  return rows;
}

/// Negative transitional patterns and their descending milestones (12).
inline const std::vector<MilestoneRow>& table4() {
  static const std::vector<MilestoneRow> rows = {
      {"P2", "may2006(43.75%), -66.667 %"},          {"P6", "sep2006(68.75%), -63.333 %"},
      {"P1,P2", "may2006(43.75%), -66.667 %"},       {"P1,P6", "sep2006(68.75%), -56.000 %"},
      {"P2,P4", "may2006(43.75%), -74.074 %"},       {"P2,P5", "apr2006(37.5%), -60.000 %"},
      {"P4,P6", "aug2006(62.5%), -66.667 %"},        {"P1,P2,P4", "may2006(43.75%), -74.074 %"},
      {"P1,P2,P5", "apr2006(37.5%), -60.000 %"},     {"P1,P4,P6", "aug2006(62.5%), -58.333 %"},
      {"P2,P4,P6", "may2006(43.75%), -61.111 %"},    {"P1,P2,P4,P6", "may2006(43.75%), -61.111 %"},
  };
  return rows;
}

}  // namespace tpmine::fixtures
