#include "polyomino/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyomino/bounds.hpp"
#include "polyomino/count_table.hpp"
#include "polyomino/enumeration.hpp"
#include "polyomino/error.hpp"
#include "polyomino/geometry.hpp"
#include "polyomino/sequences.hpp"

#ifndef POLYOMINO_DEFAULT_COUNTS
#define POLYOMINO_DEFAULT_COUNTS "data/fixed_polyominoes_56.tsv"
#endif

namespace polyomino::cli {

namespace {

struct RunConfig {
  std::string counts_path = POLYOMINO_DEFAULT_COUNTS;
  int n0 = 56;
  int digits = 5;
  int n_max = 12;
  unsigned workers = 0;
  std::string cache_path;
  std::string format = "text";
  bool inconstructible = false;
  int counting_limit = EnumerationLimits{}.counting;
  int streaming_limit = EnumerationLimits{}.streaming;
  std::vector<std::string> shapes;
};

const char* python_bool(bool value) { return value ? "True" : "False"; }

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

void print_table(std::ostream& out, const CountTable& table, const std::string& format,
                 const char* symbol) {
  if (format == "json") {
    out << table_to_json(table) << '\n';
  } else if (format == "tsv") {
    write_counts(out, table);
  } else {
    for (int n = 1; n <= table.max_n(); ++n) {
      out << symbol << '(' << n << ") = " << table[n].get_str() << '\n';
    }
  }
}

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  EnumerationLimits limits{config.counting_limit, config.streaming_limit};
  if (config.inconstructible) {
    print_table(out, count_inconstructible(config.n_max, limits), config.format, "Q");
    return kExitOk;
  }
  if (!config.cache_path.empty()) {
    if (auto cached = read_cache(config.cache_path); cached && cached->max_n() >= config.n_max) {
      print_table(out, cached->truncated(config.n_max), config.format, "P");
      return kExitOk;
    }
  }
  const CountTable table = count_fixed(config.n_max, {limits, config.workers});
  if (!config.cache_path.empty()) {
    try {
      write_cache(config.cache_path, table);
    } catch (const std::exception& e) {
      err << "warning: cache not written: " << e.what() << '\n';
    }
  }
  print_table(out, table, config.format, "P");
  return kExitOk;
}

int cmd_derive_q(const RunConfig& config, std::ostream& out) {
  const CountTable p = ingest_counts_file(config.counts_path);
  print_table(out, derive_q(p), config.format, "Q");
  return kExitOk;
}

// Mirrors the five-line output of the published check script.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CountTable full = ingest_counts_file(config.counts_path);
  if (config.n0 < 2 || config.n0 > full.max_n()) {
    throw Error("range", "--n0 " + std::to_string(config.n0) + " needs a table with at least that many rows");
  }
  const CountTable p = full.truncated(config.n0);
  const CountTable q = derive_q(p);
  const MonotonicityCheck increasing = ratios_increasing(p);
  const MonotonicityCheck decreasing = ratios_decreasing_qp(p, q);
  const GPolynomial g = build_g(p, q, config.n0);
  const bool below = delta_nonneg(g, Rational(24307, 100000));
  const bool above = delta_nonneg(g, Rational(24308, 100000));

  out << "n_0 = " << config.n0 << '\n'
      << "P[n]/P[n-1] is increasing: " << python_bool(increasing.holds) << '\n'
      << "Q[n]/P[n] is decreasing: " << python_bool(decreasing.holds) << '\n'
      << "g(0.24307) <= 2 - 2*sqrt(R): " << python_bool(below) << '\n'
      << "g(0.24308) <= 2 - 2*sqrt(R): " << python_bool(above) << '\n';

  if (!increasing.ties.empty()) {
    err << "note: P[n]/P[n-1] = P[n+1]/P[n] at n = " << join(increasing.ties) << '\n';
  }
  if (!decreasing.ties.empty()) {
    err << "note: Q[n]/P[n] = Q[n+1]/P[n+1] at n = " << join(decreasing.ties) << '\n';
  }
  if (!increasing.violations.empty()) {
    err << "note: P ratio fails to increase at n = " << join(increasing.violations) << '\n';
  }
  if (!decreasing.violations.empty()) {
    err << "note: Q/P increases after n = " << join(decreasing.violations) << '\n';
  }
  const bool as_published = increasing.holds && decreasing.holds && below && !above;
  return as_published ? kExitOk : kExitCheckFailed;
}

int cmd_bound_upper(const RunConfig& config, std::ostream& out) {
  const CountTable p = ingest_counts_file(config.counts_path);
  const BoundReport report = compute_bound_report(p, config.n0, config.digits);
  if (config.format == "json") {
    out << bound_report_json(report) << '\n';
  } else {
    out << "n_0 = " << report.n0 << '\n'
        << "R = " << fraction_string(report.r) << '\n'
        << "theta = " << report.theta << '\n'
        << "lambda < " << report.lambda_upper << "  (assumes " << report.upper_assumes << ")\n";
  }
  return kExitOk;
}

int cmd_bound_lower(const RunConfig& config, std::ostream& out) {
  const CountTable full = ingest_counts_file(config.counts_path);
  if (config.n0 < 2 || config.n0 > full.max_n()) {
    throw Error("range", "--n0 " + std::to_string(config.n0) + " is outside the table");
  }
  const CountTable p = full.truncated(config.n0);
  const Rational ratio = lambda_lower(p);
  const int places = std::max(1, config.digits - 1);
  const std::string rounded = decimal_floor(ratio, places);
  if (config.format == "json") {
    nlohmann::ordered_json doc;
    doc["n0"] = config.n0;
    doc["numerator"] = ratio.get_num().get_str();
    doc["denominator"] = ratio.get_den().get_str();
    doc["lambda_lower"] = rounded;
    doc["assumes"] = "P ratio increasing";
    out << doc.dump() << '\n';
  } else {
    out << "lambda >= P(" << config.n0 << ")/P(" << config.n0 - 1 << ") = "
        << p[config.n0].get_str() << "/" << p[config.n0 - 1].get_str() << '\n'
        << "lambda >= " << rounded << "  (assumes P ratio increasing)\n";
  }
  return kExitOk;
}

int cmd_u_seq(const RunConfig& config, std::ostream& out) {
  const CountTable full = ingest_counts_file(config.counts_path);
  if (config.n0 < 1 || config.n0 > full.max_n()) {
    throw Error("range", "--n0 " + std::to_string(config.n0) + " is outside the table");
  }
  const CountTable p = full.truncated(config.n0);
  const CountTable q = derive_q(p);
  const USequence u = compute_u(p, q, config.n0, std::max(config.n_max, config.n0));
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n = 1; n <= u.max_n(); ++n) {
    const std::string floor_value = decimal_floor(u.value(n), 0);
    const std::string ratio = decimal_floor(u_growth_ratio(u, n), config.digits);
    if (config.format == "json") {
      rows.push_back({{"n", n}, {"u_floor", floor_value}, {"ratio", ratio}});
    } else if (config.format == "tsv") {
      out << n << '\t' << floor_value << '\t' << ratio << '\n';
    } else {
      out << "U(" << n << ") ~ " << floor_value << "  U(n)/U(n-1) ~ " << ratio << '\n';
    }
  }
  if (config.format == "json") {
    nlohmann::ordered_json doc;
    doc["n0"] = config.n0;
    doc["R"] = fraction_string(u.r());
    doc["rows"] = std::move(rows);
    out << doc.dump() << '\n';
  }
  return kExitOk;
}

int cmd_compositions(const RunConfig& config, std::ostream& out) {
  if (config.shapes.size() != 2) throw Error("usage", "compositions takes exactly two polyominoes");
  const Polyomino first = parse_polyomino(config.shapes[0]);
  const Polyomino second = parse_polyomino(config.shapes[1]);
  const auto shapes = compositions(first, second);
  if (config.format == "json") {
    nlohmann::ordered_json doc;
    doc["count"] = shapes.size();
    doc["bound"] = 4 * first.size() * second.size();
    doc["compositions"] = nlohmann::ordered_json::array();
    for (const auto& shape : shapes) doc["compositions"].push_back(format_polyomino(shape));
    out << doc.dump() << '\n';
  } else {
    for (const auto& shape : shapes) out << format_polyomino(shape) << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const RunConfig& config, std::ostream& out) {
  if (config.shapes.size() != 1) throw Error("usage", "decompose takes exactly one polyomino");
  const SplitResult split = decompose_balanced(parse_polyomino(config.shapes[0]));
  if (config.format == "json") {
    nlohmann::ordered_json doc;
    doc["part_a"] = format_cells(split.part_a);
    doc["part_b"] = format_cells(split.part_b);
    doc["size_a"] = split.size_a;
    out << doc.dump() << '\n';
  } else {
    out << "part_a: " << format_cells(split.part_a) << '\n'
        << "part_b: " << format_cells(split.part_b) << '\n'
        << "size_a: " << split.size_a << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed polyomino counts, inconstructible counts and growth-constant bounds",
               "polyomino"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_counts = [&](CLI::App* sub) {
    sub->add_option("--counts", config.counts_path, "Count table, lines 'n<TAB>P(n)'")
        ->envname("POLYOMINO_COUNTS")
        ->capture_default_str();
  };
  auto add_n0 = [&](CLI::App* sub) {
    sub->add_option("--n0", config.n0, "Cutoff n0")->envname("POLYOMINO_N0")->capture_default_str();
  };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", config.digits, "Decimal digits")
        ->envname("POLYOMINO_DIGITS")
        ->capture_default_str();
  };
  auto add_max = [&](CLI::App* sub) {
    sub->add_option("--max", config.n_max, "Largest size")->envname("POLYOMINO_MAX")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")
        ->envname("POLYOMINO_FORMAT")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();
  };

  auto* enumerate = app.add_subcommand("enumerate", "Count fixed polyominoes by exhaustive growth");
  add_max(enumerate);
  add_format(enumerate);
  enumerate->add_option("--workers", config.workers, "Threads (0 = all cores)")
      ->envname("POLYOMINO_WORKERS");
  enumerate->add_option("--cache", config.cache_path, "Checksummed count cache")
      ->envname("POLYOMINO_CACHE");
  enumerate->add_option("--limit", config.counting_limit, "Largest size allowed for counting")
      ->envname("POLYOMINO_LIMIT")
      ->capture_default_str();
  enumerate->add_option("--stream-limit", config.streaming_limit, "Largest size allowed for streaming")
      ->envname("POLYOMINO_STREAM_LIMIT")
      ->capture_default_str();
  enumerate->add_flag("--inconstructible", config.inconstructible,
                      "Count inconstructible polyominoes directly instead");

  auto* derive = app.add_subcommand("derive-q", "Derive Q(n) from a P(n) table");
  add_counts(derive);
  add_format(derive);

  auto* verify = app.add_subcommand("verify", "Rerun the published checks on a count table");
  add_counts(verify);
  add_n0(verify);

  auto* upper = app.add_subcommand("bound-upper", "Conditional upper bound on the growth constant");
  add_counts(upper);
  add_n0(upper);
  add_digits(upper);
  add_format(upper);

  auto* lower = app.add_subcommand("bound-lower", "Conditional lower bound P(n0)/P(n0-1)");
  add_counts(lower);
  add_n0(lower);
  add_digits(lower);
  add_format(lower);

  auto* useq = app.add_subcommand("u-seq", "Majorizing sequence U(n)");
  add_counts(useq);
  add_n0(useq);
  add_max(useq);
  add_digits(useq);
  add_format(useq);

  auto* comps = app.add_subcommand("compositions", "All compositions of two polyominoes");
  comps->add_option("shapes", config.shapes, "Two polyominoes as \"col,row col,row ...\"")->required();
  add_format(comps);

  auto* decompose = app.add_subcommand("decompose", "Balanced split of a polyomino");
  decompose->add_option("shape", config.shapes, "Polyomino as \"col,row col,row ...\"")->required();
  add_format(decompose);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(config, out, err);
    if (derive->parsed()) return cmd_derive_q(config, out);
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (upper->parsed()) return cmd_bound_upper(config, out);
    if (lower->parsed()) return cmd_bound_lower(config, out);
    if (useq->parsed()) return cmd_u_seq(config, out);
    if (comps->parsed()) return cmd_compositions(config, out);
    if (decompose->parsed()) return cmd_decompose(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polyomino::cli
