#include "tpmine/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpmine/config.hpp"
#include "tpmine/dataset.hpp"
#include "tpmine/report.hpp"

namespace tpmine {
namespace {

struct CommonFlags {
  std::string input;
  std::string ts = "0.05";
  std::string tt = "0.5";
  std::string range = "25:75";
  std::string format = "text";
  std::string output;
  std::size_t threads = 1;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--input", flags.input, "Transaction CSV file (tid,items,timestamp)")->required();
  cmd.add_option("--ts", flags.ts, "Pattern support threshold, fraction in (0,1]")
      ->capture_default_str();
  cmd.add_option("--tt", flags.tt, "Transitional pattern threshold, fraction in (0,1]")
      ->capture_default_str();
  cmd.add_option("--range", flags.range, "Milestone range LOW:HIGH in percent")
      ->capture_default_str();
  cmd.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd.add_option("--output", flags.output, "Output file (default: standard output)");
  cmd.add_option("--threads", flags.threads, "Worker threads for the milestone scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

MiningConfig config_from(const CommonFlags& flags) {
  MiningConfig cfg;
  try {
    cfg.support_threshold = Fraction::parse_decimal(flags.ts);
    cfg.transition_threshold = Fraction::parse_decimal(flags.tt);
    cfg.range = MilestoneRange::parse(flags.range);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.threads = flags.threads;
  return cfg;
}

void validate(const MiningConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << path << "'\n";
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transitional pattern miner (TP-Mine / ETP-Mine)", "tpmine"};
  app.require_subcommand(1);

  CommonFlags mine_flags;
  std::string algorithm = "etp";
  std::optional<std::size_t> min_sup_count;
  auto* mine = app.add_subcommand("mine", "Mine frequent and transitional patterns");
  add_common(*mine, mine_flags);
  mine->add_option("--algorithm", algorithm, "tp (all items) or etp (window-pruned seeds)")
      ->check(CLI::IsMember({"tp", "etp"}))
      ->capture_default_str();
  mine->add_option("--min-sup-count", min_sup_count,
                   "Absolute minimum support count (overrides the --ts ratio for phase 1)")
      ->check(CLI::PositiveNumber);

  CommonFlags cmp_flags;
  std::vector<std::size_t> min_sups;
  auto* compare = app.add_subcommand("compare", "Compare TP-Mine and ETP-Mine pattern counts");
  add_common(*compare, cmp_flags);
  compare->add_option("--min-sup-count", min_sups, "Absolute minimum support count (repeatable)")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadUsage;
  }

  const CommonFlags& flags = mine->parsed() ? mine_flags : cmp_flags;
  MiningConfig cfg;
  try {
    cfg = config_from(flags);
    if (mine->parsed()) {
      cfg.algorithm = parse_algorithm(algorithm);
      if (min_sup_count) {
        cfg.min_support_mode = MinSupportMode::absolute;
        cfg.absolute_min_count = *min_sup_count;
      }
    }
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadUsage;
  }

  std::optional<TransactionDatabase> db;
  try {
    db.emplace(load_database(std::filesystem::path(flags.input)));
  } catch (const LoadError& e) {
    err << "error: " << flags.input << ": " << e.what() << '\n';
    return kExitBadInput;
  }

  const bool json = flags.format == "json";
  if (mine->parsed()) {
    auto report = run_pipeline(*db, cfg);
    return emit(json ? render_json(report) : render_text(report), flags.output, out, err);
  }
  auto rows = compare_algorithms(*db, cfg, min_sups);
  return emit(json ? render_comparison_json(rows) : render_comparison_text(rows), flags.output,
              out, err);
}

}  // namespace tpmine
