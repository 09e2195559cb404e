#include "curvecount/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvecount/cache_io.hpp"
#include "curvecount/genus_two.hpp"
#include "curvecount/rational_counts.hpp"
#include "curvecount/verification.hpp"

namespace curvecount {

namespace {

namespace fs = std::filesystem;

// All numeric output is exact decimal: no separators, exponents, or locale
// formatting, because the counts outgrow every fixed-width type.

struct TableRow {
  int degree;
  std::string n_d;
  std::string n_2_d;
  std::string t_d;
};

std::vector<TableRow> table_rows(int max_degree, CountCache& cache) {
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(max_degree));
  for (int d = 1; d <= max_degree; ++d) {
    rows.push_back({d, n_rational(d, cache).get_str(),
                    n_genus_two(d, cache).get_str(),
                    tacnodal_count(d, cache).get_str()});
  }
  return rows;
}

void print_aligned(std::ostream& out,
                   const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << std::string(widths[i] - row[i].size(), ' ') << row[i];
    }
    out << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<TableRow>& rows,
                 const std::string& format) {
  if (format == "csv") {
    out << "d,N_d,N_2_d,T_d\n";
    for (const TableRow& row : rows)
      out << row.degree << ',' << row.n_d << ',' << row.n_2_d << ','
          << row.t_d << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
      nlohmann::ordered_json entry;
      entry["d"] = row.degree;
      entry["N_d"] = row.n_d;
      entry["N_2_d"] = row.n_2_d;
      entry["T_d"] = row.t_d;
      j.push_back(std::move(entry));
    }
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"d", "N_d", "N_2_d", "T_d"});
    for (const TableRow& row : rows)
      cells.push_back({std::to_string(row.degree), row.n_d, row.n_2_d,
                       row.t_d});
    print_aligned(out, cells);
  }
}

void write_breakdown(std::ostream& out, const GenusTwoBreakdown& b,
                     const std::string& format) {
  if (format == "csv") {
    out << "d,N_2_d,W11,W13,T_d,KQR_published\n";
    out << b.degree << ',' << b.n2d.get_str() << ',' << b.w11.get_str() << ','
        << b.w13.get_str() << ',' << b.tacnodal.get_str() << ','
        << b.kqr_published.get_str() << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["d"] = b.degree;
    j["N_2_d"] = b.n2d.get_str();
    j["W11"] = b.w11.get_str();
    j["W13"] = b.w13.get_str();
    j["T_d"] = b.tacnodal.get_str();
    j["KQR_published"] = b.kqr_published.get_str();
    out << j.dump(2) << '\n';
  } else {
    out << "degree " << b.degree << '\n'
        << "N_2_d " << b.n2d.get_str() << '\n'
        << "W11 " << b.w11.get_str() << '\n'
        << "W13 " << b.w13.get_str() << '\n'
        << "T_d " << b.tacnodal.get_str() << '\n'
        << "KQR_published " << b.kqr_published.get_str() << '\n';
  }
}

CLI::Option* add_cache_option(CLI::App* command, std::string& cache_path) {
  return command->add_option("--cache", cache_path,
                             "JSON cache file, loaded if present and "
                             "updated on success")
      ->envname("CURVECOUNT_CACHE");
}

CLI::Option* add_format_option(CLI::App* command, std::string& format) {
  return command
      ->add_option("--format", format, "output format (plain, csv, json)")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact counts of rational, genus-two, and tacnodal plane curves"};
  app.name("curvecount");
  app.require_subcommand(1);

  int genus = 0;
  int degree = 1;
  int max_degree = 1;
  std::string format = "plain";
  std::string cache_path;

  CLI::App* compute =
      app.add_subcommand("compute", "print a single count as exact decimal");
  compute->add_option("--genus", genus, "genus of the count family (0 or 2)")
      ->required()
      ->check(CLI::IsMember({0, 2}));
  compute->add_option("--degree", degree, "curve degree (>= 1)")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  add_cache_option(compute, cache_path);

  CLI::App* table = app.add_subcommand(
      "table", "print d, N_d, N_2_d, T_d for d = 1..max-degree");
  table->add_option("--max-degree", max_degree, "largest degree (>= 1)")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  add_format_option(table, format);
  add_cache_option(table, cache_path);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the invariant suite and print the JSON report");
  verify
      ->add_option("--max-degree", max_degree,
                   "largest degree (>= 7 so the golden table is exercised)")
      ->required()
      ->check(CLI::Range(7, std::numeric_limits<int>::max()));
  add_cache_option(verify, cache_path);

  CLI::App* breakdown_cmd = app.add_subcommand(
      "breakdown", "print the genus-two stratum decomposition for one degree");
  breakdown_cmd->add_option("--degree", degree, "curve degree (>= 1)")
      ->required()
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  add_format_option(breakdown_cmd, format);
  add_cache_option(breakdown_cmd, cache_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    CountCache cache;
    std::optional<fs::path> cache_file;
    if (!cache_path.empty()) cache_file = fs::path(cache_path);
    if (cache_file && fs::exists(*cache_file)) cache = load_cache(*cache_file);

    int rc = 0;
    if (compute->parsed()) {
      Integer value = genus == 0 ? n_rational(degree, cache)
                                 : n_genus_two(degree, cache);
      out << value.get_str() << '\n';
    } else if (table->parsed()) {
      write_table(out, table_rows(max_degree, cache), format);
    } else if (verify->parsed()) {
      VerificationReport report = run_suite(max_degree, cache);
      out << report_to_json(report).dump(2) << '\n';
      rc = report.passed ? 0 : 1;
    } else {
      write_breakdown(out, breakdown(degree, cache), format);
    }

    if (rc == 0 && cache_file) save_cache(cache, *cache_file);
    return rc;
  } catch (const CacheIoError& e) {
    err << "curvecount: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "curvecount: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "curvecount: internal violation: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace curvecount
