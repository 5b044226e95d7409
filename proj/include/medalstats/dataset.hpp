#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tsv.hpp"

namespace medalstats {

struct MedalCounts {
  int gold = 0;
  int silver = 0;
  int bronze = 0;
  int total() const { return gold + silver + bronze; }
};

/// One Winter Games: Norwegian medal haul against the event count.
struct GamesRecord {
  std::string host;
  int year = 0;
  int events = 0;
  MedalCounts norway;
  int nations = 0;
  double percent = 0.0;  // 100 * total / (3 * events), one decimal
};

/// One nation of the final 2026 table. Olympic Points use half-point
/// granularity (shared placements), so they are stored doubled as an integer
/// and sums stay exact.
struct NationRow {
  int rank = 0;
  bool rank_shared = false;  // printed blank: ties the rank of the row above
  std::string code;
  MedalCounts medals;
  bool has_medals = true;  // false for rows listing Olympic Points only
  int op_half = 0;
  int op_rank = 0;
  double olympic_points() const { return op_half / 2.0; }
};

enum class Sex { men, ladies };

/// A single grid cell; origin is a nation code when the medal is booked here
/// but annotated as won under another flag (see the ladies 1964 KOR entry).
struct SpeedskatingCell {
  int count = 0;
  std::string origin;
};

struct SpeedskatingRow {
  int year = 0;
  std::vector<SpeedskatingCell> cells;  // one per nation column
};

struct SpeedskatingTable {
  Sex sex = Sex::men;
  std::vector<std::string> nations;
  std::vector<int> header_totals;
  std::vector<SpeedskatingRow> rows;

  int column_sum(size_t j) const {
    int sum = 0;
    for (const auto& row : rows) sum += row.cells[j].count;
    return sum;
  }
  int total_for(std::string_view code) const {
    for (size_t j = 0; j < nations.size(); ++j)
      if (nations[j] == code) return header_totals[j];
    throw std::out_of_range("no nation '" + std::string(code) + "' in speedskating table");
  }
};

struct CombinedSpeedskatingRow {
  std::string code;
  int men = 0;
  int ladies = 0;
  int total = 0;  // always men + ladies
};

struct HistoricalTotals {
  int medals = 0;
  int events = 0;
  double percent = 0.0;  // 100 * medals / events (events, not medal chances)
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<std::string> notes;  // documented discrepancies, not failures
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.passed; });
  }
};

/// Round to one decimal, halves away from zero. The small guard keeps values
/// that are an exact half in decimal (but a hair below it in binary) from
/// rounding down.
inline double round1(double x) {
  double r = std::floor(std::fabs(x) * 10.0 + 0.5 + 1e-9) / 10.0;
  return x < 0.0 ? -r : r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw std::runtime_error("error while reading '" + path + "'");
  return buf.str();
}

// ---------------------------------------------------------------------------
// Games table (columns: host, year, events, gold, silver, bronze, total,
// nations, percent)

inline std::vector<GamesRecord> parse_games_table(std::string_view text) {
  std::vector<GamesRecord> records;
  tsv::for_each_row(text, [&](int line, const std::vector<std::string_view>& f) {
    if (f.size() != 9)
      throw ParseError("expected 9 tab-separated fields, got " + std::to_string(f.size()), line);
    GamesRecord rec;
    rec.host = std::string(tsv::trim(f[0]));
    if (rec.host.empty()) throw ParseError("empty host field", line);
    rec.year = tsv::parse_int(f[1], line, "year");
    if (rec.year < 1924 || rec.year > 2026)
      throw ParseError("year " + std::to_string(rec.year) + " outside 1924-2026", line);
    rec.events = tsv::parse_int(f[2], line, "events");
    if (rec.events < 1) throw ParseError("events must be at least 1", line);
    rec.norway.gold = tsv::parse_int(f[3], line, "gold");
    rec.norway.silver = tsv::parse_int(f[4], line, "silver");
    rec.norway.bronze = tsv::parse_int(f[5], line, "bronze");
    if (rec.norway.gold < 0 || rec.norway.silver < 0 || rec.norway.bronze < 0)
      throw ParseError("negative medal count", line);
    int total = tsv::parse_int(f[6], line, "total");
    if (total != rec.norway.total())
      throw ParseError("total " + std::to_string(total) + " does not equal gold+silver+bronze (" +
                           std::to_string(rec.norway.total()) + ")",
                       line);
    if (total > 3 * rec.events)
      throw ParseError("medal total exceeds 3*events", line);
    rec.nations = tsv::parse_int(f[7], line, "nations");
    if (rec.nations < 1) throw ParseError("nations must be at least 1", line);
    rec.percent = tsv::parse_double(f[8], line, "percent");
    double recomputed = round1(100.0 * total / (3.0 * rec.events));
    if (std::fabs(recomputed - rec.percent) > 1e-9)
      throw ParseError("percent " + tsv::format_fixed(rec.percent, 1) +
                           " disagrees with recomputed " + tsv::format_fixed(recomputed, 1),
                       line);
    if (!records.empty()) {
      if (rec.year == records.back().year)
        throw IntegrityError("duplicate year " + std::to_string(rec.year));
      if (rec.year < records.back().year)
        throw IntegrityError("years out of order at " + std::to_string(rec.year));
    }
    records.push_back(std::move(rec));
  });
  return records;
}

inline std::string serialize_games_table(const std::vector<GamesRecord>& records) {
  std::string out = "# host\tyear\tevents\tgold\tsilver\tbronze\ttotal\tnations\tpercent\n";
  for (const auto& r : records) {
    out += r.host;
    out += '\t';
    out += std::to_string(r.year) + '\t' + std::to_string(r.events) + '\t';
    out += std::to_string(r.norway.gold) + '\t' + std::to_string(r.norway.silver) + '\t' +
           std::to_string(r.norway.bronze) + '\t' + std::to_string(r.norway.total()) + '\t';
    out += std::to_string(r.nations) + '\t' + tsv::format_fixed(r.percent, 1) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nation table (columns: rank, code, gold, silver, bronze, total, op, op_rank)

inline std::vector<NationRow> parse_nation_table(std::string_view text) {
  std::vector<NationRow> rows;
  std::set<std::string, std::less<>> seen;
  tsv::for_each_row(text, [&](int line, const std::vector<std::string_view>& f) {
    if (f.size() != 8)
      throw ParseError("expected 8 tab-separated fields, got " + std::to_string(f.size()), line);
    NationRow row;

    auto rank_field = tsv::trim(f[0]);
    if (rank_field.empty()) {
      if (rows.empty()) throw ParseError("first row cannot share a rank with a previous row", line);
      row.rank = rows.back().rank;
      row.rank_shared = true;
    } else {
      row.rank = tsv::parse_int(rank_field, line, "rank");
      if (row.rank < 1) throw ParseError("rank must be at least 1", line);
      if (!rows.empty() && row.rank < rows.back().rank)
        throw IntegrityError("rank order violated at " + std::string(tsv::trim(f[1])));
    }

    row.code = std::string(tsv::trim(f[1]));
    if (row.code.size() != 3) throw ParseError("nation code must be three characters", line);
    if (!seen.insert(row.code).second) throw IntegrityError("duplicate nation " + row.code);

    bool blank[4];
    for (int i = 0; i < 4; ++i) blank[i] = tsv::trim(f[2 + i]).empty();
    if (blank[0] != blank[1] || blank[0] != blank[2] || blank[0] != blank[3])
      throw ParseError("medal columns must be all present or all blank", line);
    if (blank[0]) {
      row.has_medals = false;
    } else {
      row.medals.gold = tsv::parse_int(f[2], line, "gold");
      row.medals.silver = tsv::parse_int(f[3], line, "silver");
      row.medals.bronze = tsv::parse_int(f[4], line, "bronze");
      if (row.medals.gold < 0 || row.medals.silver < 0 || row.medals.bronze < 0)
        throw IntegrityError("negative medal count for " + row.code);
      int total = tsv::parse_int(f[5], line, "total");
      if (total != row.medals.total())
        throw IntegrityError("medal total mismatch for " + row.code);
    }

    double op = tsv::parse_double(f[6], line, "olympic points");
    double doubled = op * 2.0;
    long long half = std::llround(doubled);
    if (std::fabs(doubled - static_cast<double>(half)) > 1e-6)
      throw ParseError("olympic points must have half-point granularity", line);
    if (half < 0) throw IntegrityError("negative olympic points for " + row.code);
    row.op_half = static_cast<int>(half);

    row.op_rank = tsv::parse_int(f[7], line, "op rank");
    if (row.op_rank < 1) throw ParseError("op rank must be at least 1", line);

    // Placements 4-6 can only add points on top of the medals themselves.
    int medals_floor_half = 2 * (7 * row.medals.gold + 5 * row.medals.silver + 4 * row.medals.bronze);
    if (row.op_half < medals_floor_half)
      throw IntegrityError("olympic points below the medals-only floor for " + row.code);

    if (row.has_medals) {
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (!it->has_medals) continue;
        if (it->medals.total() < row.medals.total())
          throw IntegrityError("rows not sorted by medal total at " + row.code);
        break;
      }
    }
    rows.push_back(std::move(row));
  });
  return rows;
}

inline std::string serialize_nation_table(const std::vector<NationRow>& rows) {
  std::string out = "# rank\tcode\tgold\tsilver\tbronze\ttotal\top\top_rank\n";
  for (const auto& r : rows) {
    if (!r.rank_shared) out += std::to_string(r.rank);
    out += '\t';
    out += r.code;
    out += '\t';
    if (r.has_medals) {
      out += std::to_string(r.medals.gold) + '\t' + std::to_string(r.medals.silver) + '\t' +
             std::to_string(r.medals.bronze) + '\t' + std::to_string(r.medals.total()) + '\t';
    } else {
      out += "\t\t\t\t";
    }
    out += tsv::format_fixed(r.op_half / 2.0, 1) + '\t' + std::to_string(r.op_rank) + '\n';
  }
  return out;
}

struct NationTableTotals {
  int gold = 0;
  int silver = 0;
  int bronze = 0;
  int total = 0;
  long long op_half = 0;
};

/// The five column sums printed in the 2026 table's totals row.
inline constexpr NationTableTotals kNations2026Totals{116, 118, 115, 349, 5104};

inline ValidationReport validate_totals(const std::vector<NationRow>& rows,
                                        const NationTableTotals& expected = kNations2026Totals) {
  NationTableTotals sums;
  for (const auto& r : rows) {
    sums.gold += r.medals.gold;
    sums.silver += r.medals.silver;
    sums.bronze += r.medals.bronze;
    sums.total += r.medals.total();
    sums.op_half += r.op_half;
  }
  ValidationReport report;
  auto check = [&report](const std::string& name, long long got, long long want,
                         bool halves = false) {
    ValidationCheck c;
    c.name = name;
    c.passed = got == want;
    auto show = [halves](long long v) {
      return halves ? tsv::format_fixed(v / 2.0, 1) : std::to_string(v);
    };
    c.detail = c.passed ? name + " sum " + show(got)
                        : name + " sum " + show(got) + " != expected " + show(want);
    report.checks.push_back(std::move(c));
  };
  check("gold", sums.gold, expected.gold);
  check("silver", sums.silver, expected.silver);
  check("bronze", sums.bronze, expected.bronze);
  check("total", sums.total, expected.total);
  check("olympic-points", sums.op_half, expected.op_half, true);
  return report;
}

// ---------------------------------------------------------------------------
// Speedskating tables (row 1: codes, row 2: all-time totals, then year rows;
// blank cell = 0; "1(NKR)" books a medal here while flagging its origin)

namespace detail {

inline SpeedskatingCell parse_skating_cell(std::string_view field, int line) {
  SpeedskatingCell cell;
  auto t = tsv::trim(field);
  if (t.empty()) return cell;
  size_t paren = t.find('(');
  std::string_view count_part = paren == std::string_view::npos ? t : t.substr(0, paren);
  cell.count = tsv::parse_int(count_part, line, "medal count");
  if (cell.count < 0) throw IntegrityError("negative medal count in a speedskating cell");
  if (paren != std::string_view::npos) {
    if (t.back() != ')' || paren + 2 >= t.size())
      throw ParseError("malformed cell annotation '" + std::string(t) + "'", line);
    cell.origin = std::string(t.substr(paren + 1, t.size() - paren - 2));
  }
  return cell;
}

}  // namespace detail

inline SpeedskatingTable parse_speedskating(std::string_view text, Sex sex) {
  SpeedskatingTable table;
  table.sex = sex;
  int header_rows = 0;
  tsv::for_each_row(text, [&](int line, const std::vector<std::string_view>& f) {
    if (header_rows == 0) {
      if (tsv::trim(f[0]) != "year")
        throw ParseError("expected the nation-code header row starting with 'year'", line);
      std::set<std::string, std::less<>> seen;
      for (size_t i = 1; i < f.size(); ++i) {
        std::string code(tsv::trim(f[i]));
        if (code.empty()) throw ParseError("empty nation code in header", line);
        if (!seen.insert(code).second) throw IntegrityError("duplicate nation " + code);
        table.nations.push_back(std::move(code));
      }
      if (table.nations.empty()) throw ParseError("header row lists no nations", line);
      header_rows = 1;
      return;
    }
    if (header_rows == 1) {
      if (tsv::trim(f[0]) != "total")
        throw ParseError("expected the totals row starting with 'total'", line);
      if (f.size() != table.nations.size() + 1)
        throw ParseError("totals row has " + std::to_string(f.size() - 1) + " entries for " +
                             std::to_string(table.nations.size()) + " nations",
                         line);
      for (size_t i = 1; i < f.size(); ++i) {
        int t = tsv::parse_int(f[i], line, "total");
        if (t < 0) throw IntegrityError("negative header total for " + table.nations[i - 1]);
        table.header_totals.push_back(t);
      }
      header_rows = 2;
      return;
    }
    SpeedskatingRow row;
    row.year = tsv::parse_int(f[0], line, "year");
    if (!table.rows.empty()) {
      if (row.year == table.rows.back().year)
        throw IntegrityError("duplicate year " + std::to_string(row.year));
      if (row.year < table.rows.back().year)
        throw IntegrityError("years out of order at " + std::to_string(row.year));
    }
    if (f.size() > table.nations.size() + 1)
      throw ParseError("row has more cells than nations", line);
    row.cells.resize(table.nations.size());
    for (size_t i = 1; i < f.size(); ++i)
      row.cells[i - 1] = detail::parse_skating_cell(f[i], line);
    table.rows.push_back(std::move(row));
  });
  if (header_rows < 2) throw IntegrityError("speedskating table lacks header or totals row");

  for (size_t j = 0; j < table.nations.size(); ++j) {
    int sum = table.column_sum(j);
    if (sum != table.header_totals[j])
      throw IntegrityError(table.nations[j] + " column sums to " + std::to_string(sum) +
                           " but the header total is " + std::to_string(table.header_totals[j]));
  }
  return table;
}

inline std::string serialize_speedskating(const SpeedskatingTable& table) {
  std::string out = "year";
  for (const auto& code : table.nations) out += '\t' + code;
  out += "\ntotal";
  for (int t : table.header_totals) out += '\t' + std::to_string(t);
  out += '\n';
  for (const auto& row : table.rows) {
    out += std::to_string(row.year);
    size_t last = 0;
    for (size_t j = 0; j < row.cells.size(); ++j)
      if (row.cells[j].count != 0) last = j + 1;
    for (size_t j = 0; j < last; ++j) {
      out += '\t';
      const auto& cell = row.cells[j];
      if (cell.count != 0) {
        out += std::to_string(cell.count);
        if (!cell.origin.empty()) out += '(' + cell.origin + ')';
      }
    }
    out += '\n';
  }
  return out;
}

enum class AggregationMode { lumped, split };

/// Merge both tables into per-nation all-time rows. Split mode honors cell
/// annotations by moving the medal to the origin code; lumped mode keeps it
/// where the grid books it.
inline std::vector<CombinedSpeedskatingRow> aggregate_speedskating(
    const SpeedskatingTable& men, const SpeedskatingTable& ladies,
    AggregationMode mode = AggregationMode::split) {
  std::map<std::string, std::pair<int, int>> totals;  // code -> (men, ladies)
  auto add_table = [&](const SpeedskatingTable& t) {
    auto slot = [&](const std::string& code) -> int& {
      auto& entry = totals[code];
      return t.sex == Sex::men ? entry.first : entry.second;
    };
    for (size_t j = 0; j < t.nations.size(); ++j) slot(t.nations[j]) += t.header_totals[j];
    if (mode == AggregationMode::split) {
      for (const auto& row : t.rows) {
        for (size_t j = 0; j < row.cells.size(); ++j) {
          const auto& cell = row.cells[j];
          if (cell.origin.empty() || cell.count == 0) continue;
          int& from = slot(t.nations[j]);
          from -= cell.count;
          if (from < 0)
            throw IntegrityError("annotation moves more medals than " + t.nations[j] + " holds");
          slot(cell.origin) += cell.count;
        }
      }
    }
  };
  add_table(men);
  add_table(ladies);

  std::vector<CombinedSpeedskatingRow> rows;
  for (const auto& [code, counts] : totals) {
    CombinedSpeedskatingRow row;
    row.code = code;
    row.men = counts.first;
    row.ladies = counts.second;
    row.total = row.men + row.ladies;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const CombinedSpeedskatingRow& a, const CombinedSpeedskatingRow& b) {
              if (a.total != b.total) return a.total > b.total;
              if (a.men != b.men) return a.men > b.men;
              return a.code < b.code;
            });
  return rows;
}

// ---------------------------------------------------------------------------

inline HistoricalTotals historical_totals(const std::vector<GamesRecord>& games) {
  if (games.empty()) throw std::invalid_argument("historical_totals: empty games table");
  HistoricalTotals t;
  for (const auto& g : games) {
    t.medals += g.norway.total();
    t.events += g.events;
  }
  // The share of events, not of the 3x larger pool of medal chances.
  t.percent = 100.0 * t.medals / t.events;
  return t;
}

}  // namespace medalstats
