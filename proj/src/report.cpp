#include "tpmine/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tpmine {
namespace {

using Json = nlohmann::ordered_json;

Json fraction_json(const Fraction& f) {
  return Json{{"value", f.to_double()}, {"num", f.num()}, {"den", f.den()}};
}

Fraction fraction_from(const Json& j) {
  return Fraction(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::vector<ReportTransitional> convert(const TransactionDatabase& db,
                                        std::span<const TransitionalPattern> patterns) {
  std::vector<ReportTransitional> out;
  out.reserve(patterns.size());
  for (const auto& tp : patterns) {
    ReportTransitional r;
    r.items = db.labels(tp.itemset);
    for (const auto& m : tp.milestones) {
      r.milestones.push_back({m.occurrence, m.position, m.timestamp.iso(), m.timestamp_label(),
                              m.milestone_percent(), m.sup_before, m.sup_after, m.ratio});
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json transitional_json(const std::vector<ReportTransitional>& list) {
  Json arr = Json::array();
  for (const auto& tp : list) {
    Json ms = Json::array();
    for (const auto& m : tp.milestones) {
      ms.push_back(Json{{"occurrence", m.occurrence},
                        {"position", m.position},
                        {"timestamp", m.timestamp},
                        {"label", m.label},
                        {"milestone_pct", fraction_json(m.milestone_pct)},
                        {"sup_before", fraction_json(m.sup_before)},
                        {"sup_after", fraction_json(m.sup_after)},
                        {"ratio", fraction_json(m.ratio)},
                        {"display", m.display()}});
    }
    arr.push_back(Json{{"items", tp.items}, {"milestones", std::move(ms)}});
  }
  return arr;
}

std::vector<ReportTransitional> transitional_from(const Json& arr) {
  std::vector<ReportTransitional> out;
  for (const auto& j : arr) {
    ReportTransitional tp;
    tp.items = j.at("items").get<std::vector<std::string>>();
    for (const auto& m : j.at("milestones")) {
      tp.milestones.push_back({m.at("occurrence").get<std::size_t>(),
                               m.at("position").get<std::size_t>(),
                               m.at("timestamp").get<std::string>(),
                               m.at("label").get<std::string>(),
                               fraction_from(m.at("milestone_pct")),
                               fraction_from(m.at("sup_before")),
                               fraction_from(m.at("sup_after")),
                               fraction_from(m.at("ratio"))});
    }
    out.push_back(std::move(tp));
  }
  return out;
}

void render_transitional_text(std::ostringstream& os, const std::vector<ReportTransitional>& list) {
  for (const auto& tp : list) {
    os << join(tp.items, ",") << '\t';
    for (std::size_t i = 0; i < tp.milestones.size(); ++i) {
      if (i > 0) os << "; ";
      os << tp.milestones[i].display();
    }
    os << '\n';
  }
}

}  // namespace

std::string ReportMilestone::display() const {
  return label + "(" + milestone_pct.to_trimmed(2) + "%), " +
         (ratio * Fraction(100)).to_fixed(3) + " %";
}

Report make_report(const TransactionDatabase& db, const MiningConfig& config,
                   std::span<const FrequentPattern> frequent, const TransitionalResult& result,
                   double elapsed_ms) {
  Report r;
  r.meta.algorithm = std::string(to_string(config.algorithm));
  r.meta.support_threshold = config.support_threshold;
  r.meta.transition_threshold = config.transition_threshold;
  r.meta.range_low = config.range.low_pct();
  r.meta.range_high = config.range.high_pct();
  r.meta.window = window_positions(db, config.range);
  r.meta.transactions = db.size();
  r.meta.min_count = effective_min_count(config, db.size());
  r.meta.elapsed_ms = elapsed_ms;

  r.frequent.reserve(frequent.size());
  for (const auto& fp : frequent) r.frequent.push_back({db.labels(fp.itemset), fp.support});
  r.positive = convert(db, result.positives);
  r.negative = convert(db, result.negatives);

  r.meta.frequent_count = r.frequent.size();
  r.meta.positive_count = r.positive.size();
  r.meta.negative_count = r.negative.size();
  return r;
}

Report run_pipeline(const TransactionDatabase& db, const MiningConfig& config) {
  config.validate();
  auto start = std::chrono::steady_clock::now();
  auto frequent = mine_frequent(db, config);
  auto result = mine_transitional(db, frequent, config);
  std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return make_report(db, config, frequent, result, elapsed.count());
}

std::string render_text(const Report& report) {
  const auto& m = report.meta;
  std::ostringstream os;
  os << "algorithm: " << m.algorithm << '\n'
     << "transactions: " << m.transactions << '\n'
     << "support threshold: " << m.support_threshold.to_trimmed(6) << '\n'
     << "transitional threshold: " << m.transition_threshold.to_trimmed(6) << '\n'
     << "milestone range: " << m.range_low.to_trimmed(6) << "%.." << m.range_high.to_trimmed(6)
     << '%';
  if (m.window) {
    os << " (positions " << m.window->lo << ".." << m.window->hi << ")\n";
  } else {
    os << " (empty window)\n";
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", m.elapsed_ms);
  os << "minimum support count: " << m.min_count << '\n'
     << "frequent patterns: " << m.frequent_count << '\n'
     << "positive transitional patterns: " << m.positive_count << '\n'
     << "negative transitional patterns: " << m.negative_count << '\n'
     << "elapsed: " << elapsed << " ms\n";

  os << "\n[frequent patterns]\n";
  for (const auto& fp : report.frequent) os << join(fp.items, ",") << '\t' << fp.support << '\n';
  os << "\n[positive transitional patterns]\n";
  render_transitional_text(os, report.positive);
  os << "\n[negative transitional patterns]\n";
  render_transitional_text(os, report.negative);
  return os.str();
}

std::string render_json(const Report& report) {
  const auto& m = report.meta;
  Json meta{{"algorithm", m.algorithm},
            {"support_threshold", fraction_json(m.support_threshold)},
            {"transition_threshold", fraction_json(m.transition_threshold)},
            {"range", Json{{"low_pct", fraction_json(m.range_low)},
                           {"high_pct", fraction_json(m.range_high)}}},
            {"window", m.window ? Json{{"lo", m.window->lo}, {"hi", m.window->hi}} : Json()},
            {"transactions", m.transactions},
            {"min_count", m.min_count},
            {"frequent_count", m.frequent_count},
            {"positive_count", m.positive_count},
            {"negative_count", m.negative_count},
            {"elapsed_ms", m.elapsed_ms}};

  Json frequent = Json::array();
  for (const auto& fp : report.frequent) {
    frequent.push_back(Json{{"items", fp.items}, {"support", fp.support}});
  }
  Json doc{{"meta", std::move(meta)},
           {"frequent", std::move(frequent)},
           {"positive", transitional_json(report.positive)},
           {"negative", transitional_json(report.negative)}};
  return doc.dump(2) + "\n";
}

Report parse_json_report(std::string_view text) {
  try {
    auto doc = Json::parse(text);
    const auto& m = doc.at("meta");
    Report r;
    r.meta.algorithm = m.at("algorithm").get<std::string>();
    r.meta.support_threshold = fraction_from(m.at("support_threshold"));
    r.meta.transition_threshold = fraction_from(m.at("transition_threshold"));
    r.meta.range_low = fraction_from(m.at("range").at("low_pct"));
    r.meta.range_high = fraction_from(m.at("range").at("high_pct"));
    if (const auto& w = m.at("window"); !w.is_null()) {
      r.meta.window = Window{w.at("lo").get<Position>(), w.at("hi").get<Position>()};
    }
    r.meta.transactions = m.at("transactions").get<std::size_t>();
    r.meta.min_count = m.at("min_count").get<std::size_t>();
    r.meta.frequent_count = m.at("frequent_count").get<std::size_t>();
    r.meta.positive_count = m.at("positive_count").get<std::size_t>();
    r.meta.negative_count = m.at("negative_count").get<std::size_t>();
    r.meta.elapsed_ms = m.at("elapsed_ms").get<double>();

    for (const auto& fp : doc.at("frequent")) {
      r.frequent.push_back(
          {fp.at("items").get<std::vector<std::string>>(), fp.at("support").get<std::size_t>()});
    }
    r.positive = transitional_from(doc.at("positive"));
    r.negative = transitional_from(doc.at("negative"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
}

std::vector<ComparisonRow> compare_algorithms(const TransactionDatabase& db,
                                              const MiningConfig& base,
                                              std::span<const std::size_t> min_sups) {
  std::vector<ComparisonRow> rows;
  for (std::size_t min_sup : min_sups) {
    MiningConfig cfg = base;
    cfg.min_support_mode = MinSupportMode::absolute;
    cfg.absolute_min_count = min_sup;
    cfg.validate();

    cfg.algorithm = Algorithm::tp_mine;
    auto tp = mine_frequent(db, cfg);
    auto tp_result = mine_transitional(db, tp, cfg);

    cfg.algorithm = Algorithm::etp_mine;
    auto etp = mine_frequent(db, cfg);
    auto etp_result = mine_transitional(db, etp, cfg);

    rows.push_back({min_sup, tp.size(), etp.size(), tp_result == etp_result});
  }
  return rows;
}

std::string render_comparison_text(std::span<const ComparisonRow> rows) {
  std::ostringstream os;
  os << "min_sup\ttp_count\tetp_count\tidentical\n";
  for (const auto& r : rows) {
    os << r.min_sup << '\t' << r.tp_count << '\t' << r.etp_count << '\t'
       << (r.identical ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string render_comparison_json(std::span<const ComparisonRow> rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"min_sup", r.min_sup},
                       {"tp_count", r.tp_count},
                       {"etp_count", r.etp_count},
                       {"identical", r.identical}});
  }
  return Json{{"comparison", std::move(arr)}}.dump(2) + "\n";
}

}  // namespace tpmine
