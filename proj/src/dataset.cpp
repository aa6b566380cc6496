#include "tpmine/dataset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <unordered_set>

namespace tpmine {
namespace {

constexpr std::array<const char*, 12> kMonthNames = {"jan", "feb", "mar", "apr", "may", "jun",
                                                     "jul", "aug", "sep", "oct", "nov", "dec"};

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool parse_uint(std::string_view s, unsigned& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool is_leap(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

unsigned days_in_month(int year, unsigned month) {
  static constexpr std::array<unsigned, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};
  return month == 2 && is_leap(year) ? 29 : kDays[month - 1];
}

bool valid_label(std::string_view label) {
  return !label.empty() && label.find_first_of(",;\n\r") == std::string_view::npos;
}

bool is_header(std::string_view line) {
  auto fields = split(line, ',');
  if (fields.size() != 3) return false;
  std::array<std::string_view, 3> expected = {"tid", "items", "timestamp"};
  for (std::size_t i = 0; i < 3; ++i) {
    auto f = trim(fields[i]);
    if (f.size() != expected[i].size()) return false;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (std::tolower(static_cast<unsigned char>(f[j])) != expected[i][j]) return false;
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Itemset

Itemset::Itemset(std::vector<ItemIndex> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset::Itemset(std::initializer_list<ItemIndex> items)
    : Itemset(std::vector<ItemIndex>(items)) {}

Itemset Itemset::from_sorted(std::vector<ItemIndex> items) {
  Itemset out;
  out.items_ = std::move(items);
  return out;
}

bool Itemset::is_subset_of(const Itemset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                b.items_.begin(), b.items_.end());
}

// ---------------------------------------------------------------------------
// Timestamp

Timestamp Timestamp::parse(std::string_view text) {
  auto fail = [&] {
    return std::invalid_argument("unparseable timestamp '" + std::string(text) +
                                 "' (expected YYYY-MM or YYYY-MM-DD)");
  };
  auto parts = split(trim(text), '-');
  if (parts.size() != 2 && parts.size() != 3) throw fail();
  if (parts[0].size() != 4 || parts[1].size() != 2) throw fail();

  unsigned year = 0;
  Timestamp ts;
  if (!parse_uint(parts[0], year) || !parse_uint(parts[1], ts.month)) throw fail();
  ts.year = static_cast<int>(year);
  if (ts.month < 1 || ts.month > 12) throw fail();
  if (parts.size() == 3) {
    if (parts[2].size() != 2 || !parse_uint(parts[2], ts.day)) throw fail();
    if (ts.day < 1 || ts.day > days_in_month(ts.year, ts.month)) throw fail();
  }
  return ts;
}

std::string Timestamp::iso() const {
  char buf[32];
  if (day == 0) {
    std::snprintf(buf, sizeof buf, "%04d-%02u", year, month);
  } else {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
  }
  return buf;
}

std::string Timestamp::label() const {
  return std::string(kMonthNames.at(month - 1)) + std::to_string(year);
}

// ---------------------------------------------------------------------------
// LoadError / MilestoneRange

LoadError::LoadError(std::size_t row, const std::string& message)
    : std::runtime_error(row > 0 ? "row " + std::to_string(row) + ": " + message : message),
      row_(row) {}

MilestoneRange::MilestoneRange(Fraction low_pct, Fraction high_pct)
    : low_(low_pct), high_(high_pct) {
  if (low_ < Fraction(0) || high_ > Fraction(100) || !(low_ < high_)) {
    throw std::invalid_argument("invalid range: need 0 <= low < high <= 100");
  }
}

MilestoneRange MilestoneRange::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("invalid range '" + std::string(text) + "': expected LOW:HIGH");
  }
  try {
    return MilestoneRange(Fraction::parse_decimal(trim(text.substr(0, colon))),
                          Fraction::parse_decimal(trim(text.substr(colon + 1))));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("invalid range '" + std::string(text) + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// TransactionDatabase

TransactionDatabase TransactionDatabase::from_transactions(std::vector<RawTransaction> rows) {
  if (rows.empty()) throw LoadError(0, "database contains no transactions");

  std::unordered_set<std::string> tids;
  std::set<std::string> universe;
  for (const auto& r : rows) {
    if (!tids.insert(r.tid).second) throw LoadError(r.row, "duplicate TID '" + r.tid + "'");
    if (r.items.empty()) throw LoadError(r.row, "empty item list for TID '" + r.tid + "'");
    for (const auto& item : r.items) {
      if (!valid_label(item)) throw LoadError(r.row, "invalid item label '" + item + "'");
      universe.insert(item);
    }
  }

  TransactionDatabase db;
  db.labels_.assign(universe.begin(), universe.end());
  for (ItemIndex i = 0; i < db.labels_.size(); ++i) db.index_.emplace(db.labels_[i], i);
  db.postings_.resize(db.labels_.size());

  std::stable_sort(rows.begin(), rows.end(), [](const RawTransaction& a, const RawTransaction& b) {
    return a.timestamp < b.timestamp;
  });

  db.transactions_.reserve(rows.size());
  for (auto& r : rows) {
    std::vector<ItemIndex> ids;
    ids.reserve(r.items.size());
    for (const auto& item : r.items) ids.push_back(db.index_.at(item));
    Transaction t;
    t.tid = std::move(r.tid);
    t.timestamp = r.timestamp;
    t.position = db.transactions_.size() + 1;
    t.items = Itemset(std::move(ids));
    for (ItemIndex id : t.items) db.postings_[id].push_back(t.position);
    db.transactions_.push_back(std::move(t));
  }
  return db;
}

std::optional<ItemIndex> TransactionDatabase::find_item(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Itemset TransactionDatabase::item_universe() const {
  std::vector<ItemIndex> all(labels_.size());
  std::iota(all.begin(), all.end(), ItemIndex{0});
  return Itemset::from_sorted(std::move(all));
}

std::optional<Itemset> TransactionDatabase::itemset(std::span<const std::string> labels) const {
  std::vector<ItemIndex> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) {
    auto id = find_item(l);
    if (!id) return std::nullopt;
    ids.push_back(*id);
  }
  return Itemset(std::move(ids));
}

std::optional<Itemset> TransactionDatabase::itemset(
    std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return itemset(std::span<const std::string>(owned));
}

std::vector<std::string> TransactionDatabase::labels(const Itemset& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (ItemIndex id : set) out.push_back(labels_.at(id));
  return out;
}

std::string TransactionDatabase::format(const Itemset& set) const {
  std::string out;
  for (ItemIndex id : set) {
    if (!out.empty()) out += ',';
    out += labels_.at(id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Loading

TransactionDatabase load_database(std::istream& in) {
  std::vector<RawTransaction> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view = trim(view.substr(3));
    if (view.empty()) continue;
    if (first_content) {
      first_content = false;
      if (is_header(view)) continue;
    }

    auto fields = split(view, ',');
    if (fields.size() != 3) {
      throw LoadError(line_no, "expected 3 comma-separated fields (tid,items,timestamp), got " +
                                   std::to_string(fields.size()));
    }
    RawTransaction r;
    r.row = line_no;
    r.tid = std::string(trim(fields[0]));
    if (r.tid.empty()) throw LoadError(line_no, "empty TID");
    for (auto token : split(fields[1], ';')) {
      token = trim(token);
      if (!token.empty()) r.items.emplace_back(token);
    }
    if (r.items.empty()) throw LoadError(line_no, "empty item list");
    try {
      r.timestamp = Timestamp::parse(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw LoadError(line_no, e.what());
    }
    rows.push_back(std::move(r));
  }
  if (in.bad()) throw LoadError(0, "read error");
  return TransactionDatabase::from_transactions(std::move(rows));
}

TransactionDatabase load_database(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(0, "cannot open '" + path.string() + "'");
  return load_database(in);
}

// ---------------------------------------------------------------------------
// Queries

std::size_t cover_count(const TransactionDatabase& db, const Itemset& x) {
  if (x.empty()) throw std::invalid_argument("cover_count: empty itemset");
  // Start from the rarest item and intersect.
  std::vector<ItemIndex> order(x.begin(), x.end());
  std::sort(order.begin(), order.end(), [&](ItemIndex a, ItemIndex b) {
    return db.positions_of(a).size() < db.positions_of(b).size();
  });
  auto first = db.positions_of(order.front());
  std::vector<Position> acc(first.begin(), first.end());
  std::vector<Position> next;
  for (std::size_t i = 1; i < order.size() && !acc.empty(); ++i) {
    auto other = db.positions_of(order[i]);
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    acc.swap(next);
  }
  return acc.size();
}

std::size_t cover_count(const TransactionDatabase& db,
                        std::initializer_list<std::string_view> labels) {
  if (labels.size() == 0) throw std::invalid_argument("cover_count: empty itemset");
  auto set = db.itemset(labels);
  return set ? cover_count(db, *set) : 0;
}

Fraction support_ratio(const TransactionDatabase& db, const Itemset& x) {
  return Fraction(static_cast<std::int64_t>(cover_count(db, x)),
                  static_cast<std::int64_t>(db.size()));
}

std::optional<Window> window_positions(std::size_t db_size, const MilestoneRange& range) {
  if (db_size == 0) return std::nullopt;
  const auto n = static_cast<std::int64_t>(db_size);
  // 100*p/n >= low  <=>  p >= low*n/100 ;  100*p/n <= high  <=>  p <= high*n/100
  std::int64_t lo = (range.low_pct() * Fraction(n) / Fraction(100)).ceil();
  std::int64_t hi = (range.high_pct() * Fraction(n) / Fraction(100)).floor();
  lo = std::max<std::int64_t>(lo, 1);
  hi = std::min<std::int64_t>(hi, n);
  if (lo > hi) return std::nullopt;
  return Window{static_cast<Position>(lo), static_cast<Position>(hi)};
}

Itemset items_in_window(const TransactionDatabase& db, const MilestoneRange& range) {
  auto window = window_positions(db, range);
  if (!window) return {};
  std::vector<ItemIndex> items;
  for (Position p = window->lo; p <= window->hi; ++p) {
    const auto& t = db.at(p);
    items.insert(items.end(), t.items.begin(), t.items.end());
  }
  return Itemset(std::move(items));
}

}  // namespace tpmine
