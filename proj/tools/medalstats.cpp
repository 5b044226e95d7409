// Command-line front end: subcommands over the embedded medal datasets,
// producing text tables, TSV dumps, and SVG plots. See --help per subcommand.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "medalstats/medalstats.hpp"

namespace ms = medalstats;

namespace {

// ---------------------------------------------------------------- formatting

std::string fix(double v, int decimals) { return ms::tsv::format_fixed(v, decimals); }

// percent with one decimal, rounded the same way the published tables round
std::string pct1(double fraction) { return fix(ms::round1(100.0 * fraction), 1); }

// average ranks are integers or halves; keep integers clean
std::string rank_str(double rank) {
  if (rank == std::floor(rank)) return ms::tsv::format_int(static_cast<long long>(rank));
  return fix(rank, 1);
}

std::string score_str(double score) {
  if (score == std::floor(score)) return ms::tsv::format_int(static_cast<long long>(score));
  return fix(score, 1);
}

/// Rows of cells to aligned text columns, or plain tab-separated lines.
/// `align` holds one 'l'/'r' per column; unspecified columns right-align.
std::string render_rows(const std::vector<std::vector<std::string>>& rows, bool as_tsv,
                        std::string_view align = "") {
  std::string out;
  if (as_tsv) {
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += '\t';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }
  std::vector<size_t> width;
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.resize(i + 1, 0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      size_t pad = width[i] - row[i].size();
      bool left = i < align.size() && align[i] == 'l';
      if (left)
        line += row[i] + std::string(pad, ' ');
      else
        line += std::string(pad, ' ') + row[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out.good()) throw std::runtime_error("error while writing '" + path + "'");
}

// ---------------------------------------------------------------- data access

/// Loads each dataset from --data <dir> when given, otherwise from the
/// embedded copies.
struct DataSource {
  std::string dir;

  std::string load(const char* filename, std::string_view embedded) const {
    if (dir.empty()) return std::string(embedded);
    return ms::read_file((std::filesystem::path(dir) / filename).string());
  }

  std::vector<ms::GamesRecord> games() const {
    return ms::parse_games_table(load("games_norway.tsv", ms::embedded::games_norway));
  }
  std::vector<ms::NationRow> nations() const {
    return ms::parse_nation_table(load("nations_2026.tsv", ms::embedded::nations_2026));
  }
  ms::SpeedskatingTable skating(ms::Sex sex) const {
    if (sex == ms::Sex::men)
      return ms::parse_speedskating(load("speedskating_men.tsv", ms::embedded::speedskating_men),
                                    sex);
    return ms::parse_speedskating(
        load("speedskating_ladies.tsv", ms::embedded::speedskating_ladies), sex);
  }
  std::vector<std::pair<std::string, long long>> populations() const {
    return ms::parse_code_number_table(
        load("populations_2018.tsv", ms::embedded::populations_2018));
  }
  std::vector<std::pair<std::string, long long>> medals2018() const {
    return ms::parse_code_number_table(load("medals_2018.tsv", ms::embedded::medals_2018));
  }
  ms::RegressionDataset regression() const {
    return ms::parse_regression_table(load("regress_example.tsv", ms::embedded::regress_example));
  }
};

// ------------------------------------------------------------ sample parsing

struct NamedSample {
  std::string code;
  ms::BinomialSample sample;
};

int parse_count(std::string_view text, const std::string& spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("sample '" + spec + "' is not of the form CODE=y/n");
  return value;
}

/// "NOR=41/348"-style specs; an empty list falls back to the 2026 trio.
std::vector<NamedSample> parse_samples(const std::vector<std::string>& specs) {
  if (specs.empty())
    return {{"NOR", {41, 348}}, {"USA", {33, 348}}, {"ITA", {26, 348}}};
  std::vector<NamedSample> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    auto slash = spec.find('/');
    if (eq == std::string::npos || eq == 0 || slash == std::string::npos || slash < eq)
      throw std::invalid_argument("sample '" + spec + "' is not of the form CODE=y/n");
    int y = parse_count(std::string_view(spec).substr(eq + 1, slash - eq - 1), spec);
    int n = parse_count(std::string_view(spec).substr(slash + 1), spec);
    out.push_back({spec.substr(0, eq), ms::BinomialSample(y, n)});
  }
  return out;
}

void check_level(double level) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("--level must lie strictly inside (0, 1)");
}

// ------------------------------------------------------------------ commands

struct SeriesOptions {
  DataSource data;
  double level = 0.90;
  int from_year = 1960;
  std::string avg = "pooled";
  std::string band = "wilson";
  std::string format = "svg";
  std::string out = "series.svg";
};

int run_series(const SeriesOptions& opt) {
  check_level(opt.level);
  auto games = opt.data.games();
  auto method = opt.band == "cd" ? ms::IntervalMethod::cd : ms::IntervalMethod::wilson;
  auto mode = opt.avg == "mean" ? ms::AverageMode::mean_of_percents : ms::AverageMode::pooled;
  auto points = ms::series_percentages(games, opt.level, method);
  double average = ms::pooled_average(games, opt.from_year, mode);
  std::string avg_label =
      pct1(average) + " % (" + opt.avg + ", after " + ms::tsv::format_int(opt.from_year) + ")";

  std::string tsv_text;
  tsv_text += "# percent of medal chances with the " + fix(opt.level, 2) + " " + opt.band +
              " band, all columns in percent\n";
  tsv_text += "# average " + avg_label + "\n";
  tsv_text += "# year\tpercent\tlow\thigh\n";
  for (const auto& pt : points) {
    tsv_text += ms::tsv::format_int(pt.year);
    tsv_text += '\t';
    tsv_text += pct1(pt.estimate);
    tsv_text += '\t';
    tsv_text += fix(100.0 * pt.interval.low, 3);
    tsv_text += '\t';
    tsv_text += fix(100.0 * pt.interval.high, 3);
    tsv_text += '\n';
  }

  if (opt.format == "tsv") {
    std::cout << tsv_text;
    return 0;
  }
  if (opt.format == "text") {
    std::vector<std::vector<std::string>> rows{{"year", "percent", "low", "high"}};
    for (const auto& pt : points)
      rows.push_back({ms::tsv::format_int(pt.year), pct1(pt.estimate),
                      fix(100.0 * pt.interval.low, 3), fix(100.0 * pt.interval.high, 3)});
    std::cout << render_rows(rows, false);
    std::cout << "average " << avg_label << "\n";
    return 0;
  }

  ms::PlotSpec spec;
  spec.kind = ms::PlotKind::series_band;
  spec.title = "Norway's share of medal chances per Winter Games";
  std::vector<double> years, shares, lows, highs;
  for (const auto& pt : points) {
    years.push_back(pt.year);
    shares.push_back(pt.estimate);
    lows.push_back(pt.interval.low);
    highs.push_back(pt.interval.high);
  }
  spec.series.push_back({"share", years, shares, "", 2.0, false});
  spec.series.push_back({"band " + fix(opt.level, 2), years, highs, "#1f77b4", 1.5, true});
  spec.series.push_back({"", years, lows, "#1f77b4", 1.5, true});
  spec.level_line = average;
  spec.output_path = opt.out;
  ms::save_plot(spec);

  std::filesystem::path sidecar(opt.out);
  sidecar.replace_extension(".tsv");
  write_text_file(sidecar.string(), tsv_text);
  std::cerr << "wrote " << opt.out << " and " << sidecar.string() << "\n";
  return 0;
}

struct CcurveOptions {
  DataSource data;
  double level = 0.90;
  std::string format = "svg";
  std::string out = "ccurve.svg";
  std::vector<std::string> specs;
};

int run_ccurve(const CcurveOptions& opt) {
  check_level(opt.level);
  auto samples = parse_samples(opt.specs);
  if (samples.size() > 6)
    throw std::invalid_argument("at most 6 samples can share one plot");

  std::vector<ms::ConfidenceInterval> intervals;
  intervals.reserve(samples.size());
  for (const auto& s : samples) intervals.push_back(ms::curve_interval(s.sample, opt.level));

  bool overlap = true;
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      overlap = overlap && intervals[i].low <= intervals[j].high &&
                intervals[j].low <= intervals[i].high;

  std::string level_str = fix(opt.level, 2);
  if (opt.format == "tsv") {
    std::string out = "# code\ty\tn\tpercent\tlow\thigh\n";
    for (size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      out += s.code + '\t' + ms::tsv::format_int(s.sample.successes) + '\t' +
             ms::tsv::format_int(s.sample.trials) + '\t' + pct1(ms::point_estimate(s.sample)) +
             '\t' + fix(100.0 * intervals[i].low, 3) + '\t' + fix(100.0 * intervals[i].high, 3) +
             '\n';
    }
    out += std::string("# intervals overlap at ") + level_str + ": " + (overlap ? "yes" : "no") +
           "\n";
    std::cout << out;
  } else {
    for (size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      std::cout << s.code << ": " << s.sample.successes << "/" << s.sample.trials << " = "
                << pct1(ms::point_estimate(s.sample)) << " %, " << level_str << " interval ["
                << pct1(intervals[i].low) << ", " << pct1(intervals[i].high) << "] %\n";
    }
    std::cout << "intervals overlap at " << level_str << ": " << (overlap ? "yes" : "no") << "\n";
  }

  if (opt.format == "svg") {
    // keep the x axis tight around the widest interval instead of [0,1]
    double max_high = 0.0;
    for (const auto& ci : intervals) max_high = std::max(max_high, ci.high);
    double x_cut = std::min(1.0, 1.35 * max_high + 0.01);

    ms::PlotSpec spec;
    spec.kind = ms::PlotKind::confidence_curves;
    spec.title = "confidence curves for medal shares";
    const size_t palette_size =
        sizeof(ms::detail::kPalette) / sizeof(ms::detail::kPalette[0]);
    for (size_t i = 0; i < samples.size(); ++i) {
      auto curve = ms::confidence_curve(samples[i].sample);
      std::vector<double> xs, ys;
      for (const auto& [p, cc] : curve.grid) {
        if (p > x_cut) break;
        xs.push_back(p);
        ys.push_back(cc);
      }
      std::string color = ms::detail::kPalette[i % palette_size];
      spec.series.push_back({samples[i].code, xs, ys, color, 2.0, false});
      spec.series.push_back({"interval " + samples[i].code,
                             {intervals[i].low, intervals[i].high},
                             {opt.level, opt.level},
                             color,
                             1.0,
                             false});
    }
    spec.level_line = opt.level;
    spec.output_path = opt.out;
    ms::save_plot(spec);
    std::cerr << "wrote " << opt.out << "\n";
  }
  return overlap ? 0 : 2;
}

struct LrtOptions {
  DataSource data;
  std::vector<std::string> specs;
};

int run_lrt(const LrtOptions& opt) {
  auto samples = parse_samples(opt.specs);
  if (samples.size() < 2)
    throw std::invalid_argument("the test needs at least 2 samples");
  std::vector<ms::BinomialSample> plain;
  long long total_y = 0, total_n = 0;
  std::string sample_list;
  for (const auto& s : samples) {
    plain.push_back(s.sample);
    total_y += s.sample.successes;
    total_n += s.sample.trials;
    if (!sample_list.empty()) sample_list += ", ";
    sample_list += s.code + " " + ms::tsv::format_int(s.sample.successes) + "/" +
                   ms::tsv::format_int(s.sample.trials);
  }
  auto result = ms::lrt_equal_proportions(plain);

  std::cout << "samples: " << sample_list << "\n";
  std::cout << "pooled p = " << total_y << "/" << total_n << " = " << fix(result.pooled_p, 4)
            << "\n";
  std::cout << "deviance = " << fix(result.statistic, 4) << ", df = " << result.df << "\n";
  std::cout << "p = " << fix(result.p_value, 3) << "\n";
  if (result.degenerate)
    std::cout << "note: pooled estimate on the boundary; the hypotheses coincide\n";
  return 0;
}

struct TableOptions {
  DataSource data;
  std::string scheme = "medals";
  std::string format = "text";
};

int run_table(const TableOptions& opt) {
  auto nations = opt.data.nations();
  const ms::ScoringScheme& scheme = opt.scheme == "op7"     ? ms::kOlympicPointsScheme
                                    : opt.scheme == "fib13" ? ms::kFibonacciScheme
                                                            : ms::kMedalsScheme;

  std::vector<std::pair<std::string, double>> scores, medal_scores;
  std::map<std::string, const ms::NationRow*> by_code;
  for (const auto& row : nations) {
    // op7 ranks by the published Olympic Points, which include places 4-6;
    // the other schemes weight the medal counts alone
    double score = opt.scheme == "op7" ? row.olympic_points()
                                       : ms::score_medals(row.medals, scheme);
    scores.emplace_back(row.code, score);
    medal_scores.emplace_back(row.code, row.medals.total());
    by_code[row.code] = &row;
  }
  auto ranked = ms::rank_with_ties(scores);
  double rho = ms::spearman_rho(ranked, ms::rank_with_ties(medal_scores));

  std::vector<std::vector<std::string>> rows{
      {"rank", "code", "gold", "silver", "bronze", "total", "points", "score"}};
  bool as_tsv = opt.format == "tsv";
  for (const auto& entry : ranked.entries) {
    const ms::NationRow& nation = *by_code.at(entry.code);
    std::string blank = as_tsv ? "" : "-";
    auto medal = [&](int count) {
      return nation.has_medals ? ms::tsv::format_int(count) : blank;
    };
    rows.push_back({rank_str(entry.rank), nation.code, medal(nation.medals.gold),
                    medal(nation.medals.silver), medal(nation.medals.bronze),
                    medal(nation.medals.total()), fix(nation.olympic_points(), 1),
                    score_str(entry.score)});
  }
  std::cout << render_rows(rows, as_tsv, "rl");
  std::cout << "spearman rho (" << opt.scheme << " vs medals) = " << fix(rho, 3) << "\n";
  return 0;
}

struct SkatingOptions {
  DataSource data;
  std::string mode = "combined";
  bool lump = false;
  std::string format = "text";
};

int run_skating(const SkatingOptions& opt) {
  bool as_tsv = opt.format == "tsv";
  if (opt.mode == "men" || opt.mode == "ladies") {
    auto table = opt.data.skating(opt.mode == "men" ? ms::Sex::men : ms::Sex::ladies);
    std::vector<std::vector<std::string>> rows{{"code", "total"}};
    for (size_t j = 0; j < table.nations.size(); ++j)
      rows.push_back({table.nations[j], ms::tsv::format_int(table.header_totals[j])});
    std::cout << render_rows(rows, as_tsv, "l");
    return 0;
  }

  auto men = opt.data.skating(ms::Sex::men);
  auto ladies = opt.data.skating(ms::Sex::ladies);
  auto combined = ms::aggregate_speedskating(
      men, ladies, opt.lump ? ms::AggregationMode::lumped : ms::AggregationMode::split);
  if (as_tsv) {
    std::cout << "# code\tmen\tladies\ttotal\n";
    for (const auto& row : combined)
      std::cout << row.code << '\t' << row.men << '\t' << row.ladies << '\t' << row.total << '\n';
  } else {
    for (const auto& row : combined)
      std::cout << row.code << ' ' << row.men << " + " << row.ladies << " = " << row.total
                << '\n';
  }
  return 0;
}

struct PerCapitaOptions {
  DataSource data;
  std::string format = "text";
};

int run_percapita(const PerCapitaOptions& opt) {
  auto pops = opt.data.populations();
  auto medals = opt.data.medals2018();

  std::map<std::string, long long> medals_by_code;
  for (const auto& [code, count] : medals) medals_by_code[code] = count;
  std::set<std::string> pop_codes, medal_codes;
  for (const auto& [code, count] : pops) pop_codes.insert(code);
  for (const auto& [code, count] : medals) medal_codes.insert(code);
  if (pop_codes != medal_codes) {
    std::string msg = "population and medal tables cover different nations:";
    for (const auto& c : pop_codes)
      if (!medal_codes.count(c)) msg += " " + c + " (population only)";
    for (const auto& c : medal_codes)
      if (!pop_codes.count(c)) msg += " " + c + " (medals only)";
    throw std::invalid_argument(msg);
  }

  std::vector<ms::PerCapitaEntry> entries;
  for (const auto& [code, population] : pops)
    entries.push_back(ms::per_capita(code, population,
                                     static_cast<int>(medals_by_code.at(code))));
  std::sort(entries.begin(), entries.end(),
            [](const ms::PerCapitaEntry& a, const ms::PerCapitaEntry& b) {
              if (a.medals_per_million != b.medals_per_million)
                return a.medals_per_million > b.medals_per_million;
              return a.code < b.code;
            });

  bool as_tsv = opt.format == "tsv";
  std::vector<std::vector<std::string>> rows{
      {"code", "population", "medals", "per-medal", "per-million"}};
  for (const auto& e : entries) {
    std::string per_medal = e.has_medals
                                ? ms::tsv::format_int(std::llround(e.inhabitants_per_medal))
                                : (as_tsv ? "" : "-");
    rows.push_back({e.code, ms::tsv::format_int(e.population), ms::tsv::format_int(e.medals),
                    per_medal, fix(e.medals_per_million, 2)});
  }
  std::cout << render_rows(rows, as_tsv, "l");

  if (entries.size() >= 2) {
    auto [small, large] = std::minmax_element(
        entries.begin(), entries.end(),
        [](const ms::PerCapitaEntry& a, const ms::PerCapitaEntry& b) {
          return a.population < b.population;
        });
    std::cout << "population ratio " << large->code << " : " << small->code << " = "
              << fix(static_cast<double>(large->population) / small->population, 3) << "\n";
  }
  return 0;
}

struct RegressOptions {
  DataSource data;
};

int run_regress(const RegressOptions& opt) {
  auto table = opt.data.regression();
  auto fit = ms::fit_logistic(table);

  std::string model = "share ~ 1";
  for (const auto& name : table.covariate_names) model += " + " + name;
  std::cout << "grouped binomial fit: " << model << " ("
            << ms::tsv::format_int(static_cast<long long>(table.rows.size())) << " rows)\n";

  std::vector<std::string> names{"intercept"};
  names.insert(names.end(), table.covariate_names.begin(), table.covariate_names.end());
  size_t name_width = 0;
  for (const auto& n : names) name_width = std::max(name_width, n.size());
  for (size_t j = 0; j < fit.coefficients.size(); ++j) {
    std::cout << names[j] << std::string(name_width - names[j].size(), ' ') << " = "
              << fix(fit.coefficients[j], 4) << "  (se " << fix(fit.std_errors[j], 4) << ")\n";
  }
  std::cout << "loglik = " << fix(fit.loglik, 4) << ", iterations = " << fit.iterations
            << ", converged = " << (fit.converged ? "yes" : "no") << "\n";
  if (!table.rows.empty()) {
    const auto& first = table.rows.front();
    const auto& last = table.rows.back();
    std::cout << "fitted share " << first.label << " = " << pct1(ms::predict(fit, first.covariates))
              << " %, " << last.label << " = " << pct1(ms::predict(fit, last.covariates))
              << " %\n";
  }
  return 0;
}

struct ValidateOptions {
  DataSource data;
};

int run_validate(const ValidateOptions& opt) {
  ms::ValidationReport report;
  auto add = [&](const std::string& name, bool passed, const std::string& detail) {
    report.checks.push_back({name, passed, detail});
  };

  auto games = opt.data.games();
  add("games table", true,
      ms::tsv::format_int(static_cast<long long>(games.size())) +
          " Games parsed, percent column consistent");

  auto nations = opt.data.nations();
  auto totals = ms::validate_totals(nations);
  for (auto& check : totals.checks) report.checks.push_back(std::move(check));

  auto men = opt.data.skating(ms::Sex::men);
  auto ladies = opt.data.skating(ms::Sex::ladies);
  auto sum_totals = [](const ms::SpeedskatingTable& t) {
    int sum = 0;
    for (int v : t.header_totals) sum += v;
    return sum;
  };
  int men_sum = sum_totals(men), ladies_sum = sum_totals(ladies);
  add("speedskating men", men_sum == 371,
      ms::tsv::format_int(static_cast<long long>(men.nations.size())) +
          " nations, column sums consistent, " + ms::tsv::format_int(men_sum) +
          " medals (expected 371)");
  add("speedskating ladies", ladies_sum == 275,
      ms::tsv::format_int(static_cast<long long>(ladies.nations.size())) +
          " nations, column sums consistent, " + ms::tsv::format_int(ladies_sum) +
          " medals (expected 275)");

  auto combined = ms::aggregate_speedskating(men, ladies, ms::AggregationMode::split);
  std::map<std::string, int> combined_totals;
  for (const auto& row : combined) combined_totals[row.code] = row.total;
  const std::vector<std::pair<std::string, int>> expected_combined{
      {"NED", 146}, {"NOR", 90}, {"USA", 78}, {"GER", 71}};
  bool combined_ok = true;
  std::string combined_detail;
  for (const auto& [code, want] : expected_combined) {
    auto it = combined_totals.find(code);
    int got = it == combined_totals.end() ? -1 : it->second;
    combined_ok = combined_ok && got == want;
    if (!combined_detail.empty()) combined_detail += ", ";
    combined_detail += code + " " + ms::tsv::format_int(got);
  }
  add("combined speedskating", combined_ok, combined_detail + " (split mode)");

  auto history = ms::historical_totals(games);
  bool history_ok = history.events == 1279 &&
                    (history.medals == 446 || history.medals == 447) &&
                    ms::round1(history.percent) == 34.9;
  add("historical totals", history_ok,
      ms::tsv::format_int(history.events) + " events, " + ms::tsv::format_int(history.medals) +
          " medals, " + pct1(history.percent / 100.0) + " % of events");
  if (history.medals == 446)
    report.notes.push_back(
        "the running text counts 447 medals; the games table sums to 446");

  auto pops = opt.data.populations();
  auto medals2018 = opt.data.medals2018();
  std::set<std::string> pop_codes, medal_codes;
  for (const auto& [code, v] : pops) pop_codes.insert(code);
  for (const auto& [code, v] : medals2018) medal_codes.insert(code);
  add("per-capita tables", pop_codes == medal_codes,
      ms::tsv::format_int(static_cast<long long>(pops.size())) + " nations, code sets " +
          (pop_codes == medal_codes ? "aligned" : "misaligned"));

  auto regression = opt.data.regression();
  std::map<int, const ms::GamesRecord*> games_by_year;
  for (const auto& g : games) games_by_year[g.year] = &g;
  bool regress_ok = regression.rows.size() == games.size();
  for (const auto& row : regression.rows) {
    int year = 0;
    auto [ptr, ec] = std::from_chars(row.label.data(), row.label.data() + row.label.size(), year);
    auto it = ec == std::errc{} && ptr == row.label.data() + row.label.size()
                  ? games_by_year.find(year)
                  : games_by_year.end();
    regress_ok = regress_ok && it != games_by_year.end() &&
                 row.successes == it->second->norway.total() &&
                 row.trials == 3 * it->second->events;
  }
  add("regression table", regress_ok,
      ms::tsv::format_int(static_cast<long long>(regression.rows.size())) +
          " rows consistent with the games table");

  // published quirk: the points-rank column is competition style except Canada
  for (const auto& row : nations) {
    int better = 0;
    for (const auto& other : nations)
      if (other.op_half > row.op_half) ++better;
    if (1 + better != row.op_rank)
      report.notes.push_back("printed points rank for " + row.code + " is " +
                             ms::tsv::format_int(row.op_rank) + "; recomputing gives " +
                             ms::tsv::format_int(1 + better));
  }

  for (const auto& check : report.checks)
    std::cout << (check.passed ? "[ok]   " : "[FAIL] ") << check.name << ": " << check.detail
              << "\n";
  for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
  if (report.all_passed()) {
    std::cout << "validation: all checks passed\n";
    return 0;
  }
  int failed = 0;
  for (const auto& check : report.checks) failed += check.passed ? 0 : 1;
  std::cout << "validation: " << failed << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Winter Olympics medal statistics: Norway's per-Games record, confidence "
      "curves for medal shares, scoring-scheme rankings, and the datasets "
      "behind them"};
  app.require_subcommand(1);
  app.footer(
      "Exit status: 0 on success (for ccurve: intervals overlap), 2 when ccurve\n"
      "intervals are disjoint, nonzero otherwise.");

  SeriesOptions series_opt;
  auto* series = app.add_subcommand(
      "series", "medal share per Games with a confidence band (SVG plot + TSV sidecar)");
  series->add_option("--data", series_opt.data.dir, "directory overriding the embedded datasets");
  series->add_option("--level", series_opt.level, "confidence level for the band")
      ->capture_default_str();
  series->add_option("--from", series_opt.from_year, "average over Games after this year")
      ->capture_default_str();
  series->add_option("--avg", series_opt.avg, "averaging mode for the horizontal line")
      ->check(CLI::IsMember({"pooled", "mean"}))
      ->capture_default_str();
  series->add_option("--band", series_opt.band, "interval method for the band")
      ->check(CLI::IsMember({"wilson", "cd"}))
      ->capture_default_str();
  series->add_option("--format", series_opt.format, "svg writes --out plus a TSV sidecar")
      ->check(CLI::IsMember({"svg", "text", "tsv"}))
      ->capture_default_str();
  series->add_option("--out", series_opt.out, "output path for the SVG")->capture_default_str();

  CcurveOptions ccurve_opt;
  auto* ccurve = app.add_subcommand(
      "ccurve", "confidence curves for medal-share samples; exit status reports overlap");
  ccurve->add_option("samples", ccurve_opt.specs,
                     "1-6 samples as CODE=y/n (default: NOR=41/348 USA=33/348 ITA=26/348)");
  ccurve->add_option("--data", ccurve_opt.data.dir,
                     "accepted for symmetry; samples come from the command line");
  ccurve->add_option("--level", ccurve_opt.level, "confidence level")->capture_default_str();
  ccurve->add_option("--format", ccurve_opt.format, "svg also writes the plot to --out")
      ->check(CLI::IsMember({"svg", "text", "tsv"}))
      ->capture_default_str();
  ccurve->add_option("--out", ccurve_opt.out, "output path for the SVG")->capture_default_str();

  LrtOptions lrt_opt;
  auto* lrt = app.add_subcommand(
      "lrt", "likelihood-ratio test that the samples share one medal probability");
  lrt->add_option("samples", lrt_opt.specs,
                  "2 or more samples as CODE=y/n (default: NOR=41/348 USA=33/348 ITA=26/348)");
  lrt->add_option("--data", lrt_opt.data.dir,
                  "accepted for symmetry; samples come from the command line");

  TableOptions table_opt;
  auto* table =
      app.add_subcommand("table", "the 2026 nation table ranked under a scoring scheme");
  table->add_option("--data", table_opt.data.dir, "directory overriding the embedded datasets");
  table->add_option("--scheme", table_opt.scheme, "scoring scheme")
      ->check(CLI::IsMember({"medals", "op7", "fib13"}))
      ->capture_default_str();
  table->add_option("--format", table_opt.format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  SkatingOptions skating_opt;
  auto* skating =
      app.add_subcommand("skating", "speedskating medal totals per nation, 1924-2026");
  skating->add_option("--data", skating_opt.data.dir,
                      "directory overriding the embedded datasets");
  skating->add_option("--mode", skating_opt.mode, "which table to print")
      ->check(CLI::IsMember({"combined", "men", "ladies"}))
      ->capture_default_str();
  skating->add_flag("--lump", skating_opt.lump,
                    "book annotated medals with the nation they are printed under");
  skating->add_option("--format", skating_opt.format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  PerCapitaOptions percapita_opt;
  auto* percapita =
      app.add_subcommand("percapita", "2018 medals per population for the sample nations");
  percapita->add_option("--data", percapita_opt.data.dir,
                        "directory overriding the embedded datasets");
  percapita->add_option("--format", percapita_opt.format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  RegressOptions regress_opt;
  auto* regress = app.add_subcommand(
      "regress", "grouped binomial logistic fit of the medal share on the decade");
  regress->add_option("--data", regress_opt.data.dir,
                      "directory overriding the embedded datasets");

  ValidateOptions validate_opt;
  auto* validate = app.add_subcommand(
      "validate", "run every dataset integrity check against the published totals");
  validate->add_option("--data", validate_opt.data.dir,
                       "directory overriding the embedded datasets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*series) return run_series(series_opt);
    if (*ccurve) return run_ccurve(ccurve_opt);
    if (*lrt) return run_lrt(lrt_opt);
    if (*table) return run_table(table_opt);
    if (*skating) return run_skating(skating_opt);
    if (*percapita) return run_percapita(percapita_opt);
    if (*regress) return run_regress(regress_opt);
    if (*validate) return run_validate(validate_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
