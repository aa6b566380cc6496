#pragma once

#include <cstddef>
#include <string_view>

#include "tpmine/dataset.hpp"
#include "tpmine/fraction.hpp"

namespace tpmine {

enum class Algorithm {
  tp_mine,   // seed Apriori with every item in the database
  etp_mine,  // seed Apriori only with items occurring inside the milestone window
};

std::string_view to_string(Algorithm algorithm);
/// Accepts "tp" / "etp" (and the long forms "tp-mine" / "etp-mine").
Algorithm parse_algorithm(std::string_view text);

enum class MinSupportMode {
  ratio,     // minimum count = max(1, ceil(support_threshold * |D|))
  absolute,  // minimum count = absolute_min_count
};

struct MiningConfig {
  /// Pattern support threshold t_s, in (0, 1]. Drives the frequent-pattern
  /// minimum in ratio mode and always gates milestones on both sides.
  Fraction support_threshold{1, 20};
  /// Transitional pattern threshold t_t, in (0, 1].
  Fraction transition_threshold{1, 2};
  MilestoneRange range{Fraction(25), Fraction(75)};
  Algorithm algorithm = Algorithm::etp_mine;
  MinSupportMode min_support_mode = MinSupportMode::ratio;
  std::size_t absolute_min_count = 1;
  /// Worker threads for the transitional scan. Never changes results.
  std::size_t threads = 1;

  /// Throws std::invalid_argument when a threshold is outside (0, 1], the
  /// absolute count is zero, or threads is zero.
  void validate() const;
};

}  // namespace tpmine
