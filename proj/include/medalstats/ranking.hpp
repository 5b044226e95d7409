#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dataset.hpp"

namespace medalstats {

/// Placement weights for positions 1..6.
struct ScoringScheme {
  std::string name;
  std::array<double, 6> weights{};
};

inline const ScoringScheme kMedalsScheme{"medals", {1, 1, 1, 0, 0, 0}};
inline const ScoringScheme kOlympicPointsScheme{"op7", {7, 5, 4, 3, 2, 1}};
inline const ScoringScheme kFibonacciScheme{"fib13", {13, 8, 5, 3, 2, 1}};

namespace detail {

inline void check_scheme(const ScoringScheme& scheme) {
  if (scheme.weights[0] <= 0.0)
    throw std::invalid_argument("scoring scheme '" + scheme.name + "': first weight must be positive");
  for (size_t i = 1; i < scheme.weights.size(); ++i) {
    if (scheme.weights[i] < 0.0)
      throw std::invalid_argument("scoring scheme '" + scheme.name + "': negative weight");
    if (scheme.weights[i] > scheme.weights[i - 1])
      throw std::invalid_argument("scoring scheme '" + scheme.name + "': weights must be nonincreasing");
  }
}

}  // namespace detail

/// Score from medals alone; placements 4-6 need score_full.
inline double score_medals(const MedalCounts& m, const ScoringScheme& scheme) {
  detail::check_scheme(scheme);
  if (m.gold < 0 || m.silver < 0 || m.bronze < 0)
    throw std::invalid_argument("score_medals: negative count");
  return scheme.weights[0] * m.gold + scheme.weights[1] * m.silver + scheme.weights[2] * m.bronze;
}

/// Score over all six placements.
inline double score_full(const std::array<int, 6>& placements, const ScoringScheme& scheme) {
  detail::check_scheme(scheme);
  double score = 0.0;
  for (size_t i = 0; i < placements.size(); ++i) {
    if (placements[i] < 0) throw std::invalid_argument("score_full: negative placement count");
    score += scheme.weights[i] * placements[i];
  }
  return score;
}

struct RankEntry {
  std::string code;
  double score = 0.0;
  double rank = 0.0;  // average rank, so ties can land on halves
};

struct RankTable {
  std::vector<RankEntry> entries;  // descending by score
};

/// Descending-score ranking with the average-rank convention for ties, which
/// keeps the rank sum at n(n+1)/2.
inline RankTable rank_with_ties(const std::vector<std::pair<std::string, double>>& scores) {
  if (scores.empty()) throw std::invalid_argument("rank_with_ties: empty score list");
  RankTable table;
  table.entries.reserve(scores.size());
  for (const auto& [code, score] : scores) table.entries.push_back({code, score, 0.0});
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.score > b.score; });
  size_t i = 0;
  while (i < table.entries.size()) {
    size_t j = i;
    while (j + 1 < table.entries.size() && table.entries[j + 1].score == table.entries[i].score)
      ++j;
    double avg = 0.5 * static_cast<double>((i + 1) + (j + 1));  // mean of positions i+1 .. j+1
    for (size_t k = i; k <= j; ++k) table.entries[k].rank = avg;
    i = j + 1;
  }
  return table;
}

/// Spearman correlation as the Pearson correlation of the two rank vectors.
/// The 6-sum-of-squared-differences shortcut is wrong under ties, so the
/// general formula is used throughout.
inline double spearman_rho(const RankTable& x, const RankTable& y) {
  std::map<std::string, double> y_rank;
  for (const auto& e : y.entries) y_rank[e.code] = e.rank;
  std::map<std::string, double> x_rank;
  for (const auto& e : x.entries) x_rank[e.code] = e.rank;

  std::vector<std::string> only_x, only_y;
  for (const auto& [code, r] : x_rank)
    if (!y_rank.count(code)) only_x.push_back(code);
  for (const auto& [code, r] : y_rank)
    if (!x_rank.count(code)) only_y.push_back(code);
  if (!only_x.empty() || !only_y.empty()) {
    std::string msg = "spearman_rho: rankings cover different nations;";
    for (const auto& c : only_x) msg += " " + c + " (first only)";
    for (const auto& c : only_y) msg += " " + c + " (second only)";
    throw std::invalid_argument(msg);
  }
  size_t n = x_rank.size();
  if (n < 2) throw std::invalid_argument("spearman_rho: need at least 2 nations");

  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [code, r] : x_rank) {
    mean_x += r;
    mean_y += y_rank[code];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (const auto& [code, rx] : x_rank) {
    double dx = rx - mean_x;
    double dy = y_rank[code] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("spearman_rho: a ranking with all ranks tied has no correlation");
  return sxy / std::sqrt(sxx * syy);
}

struct PerCapitaEntry {
  std::string code;
  long long population = 0;
  int medals = 0;
  bool has_medals = false;
  double inhabitants_per_medal = 0.0;  // only meaningful when has_medals
  double medals_per_million = 0.0;
};

inline PerCapitaEntry per_capita(const std::string& code, long long population, int medals) {
  if (population <= 0) throw std::invalid_argument("per_capita: population must be positive");
  if (medals < 0) throw std::invalid_argument("per_capita: negative medal count");
  PerCapitaEntry entry;
  entry.code = code;
  entry.population = population;
  entry.medals = medals;
  entry.has_medals = medals > 0;
  if (entry.has_medals)
    entry.inhabitants_per_medal = static_cast<double>(population) / medals;
  entry.medals_per_million = 1e6 * medals / static_cast<double>(population);
  return entry;
}

/// Two-column TSV of nation code and a nonnegative integer (population or
/// medal count).
inline std::vector<std::pair<std::string, long long>> parse_code_number_table(
    std::string_view text) {
  std::vector<std::pair<std::string, long long>> rows;
  std::set<std::string> seen;
  tsv::for_each_row(text, [&](int line, const std::vector<std::string_view>& f) {
    if (f.size() != 2)
      throw ParseError("expected 2 tab-separated fields, got " + std::to_string(f.size()), line);
    std::string code(tsv::trim(f[0]));
    if (code.empty()) throw ParseError("empty nation code", line);
    if (!seen.insert(code).second) throw IntegrityError("duplicate nation " + code);
    long long value = 0;
    auto t = tsv::trim(f[1]);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
      throw ParseError("cannot parse count from '" + std::string(f[1]) + "'", line);
    if (value < 0) throw IntegrityError("negative count for " + code);
    rows.emplace_back(std::move(code), value);
  });
  return rows;
}

}  // namespace medalstats
