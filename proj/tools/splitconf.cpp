#include "splitconf/families.hpp"
#include "splitconf/incidence.hpp"
#include "splitconf/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using namespace splitconf;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct RangeFlags {
  std::uint32_t n_min = 3;
  std::uint32_t n_max = 30;
  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
  bool oracle = false;
  bool tsv = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n-min", n_min, "Smallest n")->capture_default_str();
    cmd->add_option("--n-max", n_max, "Largest n")->capture_default_str();
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--oracle", oracle, "Cross-check small graphs by brute force");
    cmd->add_flag("--tsv", tsv, "Tab-separated output with 1/0 booleans");
  }
};

void report_scan(const ScanReport& report) {
  write_scan_tsv(std::cout, report);
  for (const auto& row : report.rows) {
    if (!row.agrees) std::cerr << "COUNTEREXAMPLE " << row.symbol.to_string() << " " << to_string(row.verdict) << "\n";
    if (!row.certificate_verified) std::cerr << "UNVERIFIED CERTIFICATE " << row.symbol.to_string() << "\n";
  }
  std::cerr << report.rows.size() << " classes, " << report.mismatches() << " mismatches, "
            << report.unverified_certificates() << " unverified certificates\n";
}

Configuration read_configuration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open configuration file '" + path + "'");
  return read_configuration(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splittability of graphs and combinatorial configurations"};
  app.require_subcommand(1);

  RangeFlags count_flags;
  auto* counts = app.add_subcommand("counts", "Per-n counts of cubic cyclic Haar graph classes");
  count_flags.attach(counts);

  RangeFlags survey_flags;
  bool girth6_only = false;
  auto* survey = app.add_subcommand("survey", "One row per cubic cyclic Haar graph class");
  survey_flags.attach(survey);
  survey->add_flag("--girth6-only", girth6_only, "Only classes of girth 6");

  std::string spec;
  bool dot = false;
  auto* analyze = app.add_subcommand("analyze", "Report on one graph");
  analyze->add_option("graph", spec, "H(n;s1,...), GP(n,k), LCF[a,b,...]^r or an edge-list file")->required();
  analyze->add_flag("--dot", dot, "Print the graph in Graphviz format instead");

  CheckOptions check_options;
  auto* verify = app.add_subcommand("verify-theorems", "Run the built-in checklist of constructions");
  verify->add_option("--n-max", check_options.n_max, "Upper end of the unsplittable prefixes")->capture_default_str();
  verify->add_flag("--inject-fault", check_options.inject_fault, "Corrupt one known splitting set");

  RangeFlags cubic_flags;
  cubic_flags.n_min = 7;
  auto* scan_cubic = app.add_subcommand("scan-cubic", "Compare girth-6 cubic verdicts with the three unsplittable families");
  scan_cubic->add_option("--n-min", cubic_flags.n_min)->capture_default_str();
  scan_cubic->add_option("--n-max", cubic_flags.n_max)->capture_default_str();
  scan_cubic->add_option("--jobs", cubic_flags.jobs)->check(CLI::PositiveNumber);

  std::uint32_t k = 4, max_n = 24;
  RangeFlags higher_flags;
  higher_flags.n_min = 7;
  higher_flags.n_max = 14;
  auto* scan_k = app.add_subcommand("scan-k", "Splittability of girth-6 cyclic Haar graphs of valency k >= 4");
  scan_k->add_option("--k", k)->capture_default_str();
  scan_k->add_option("--n-min", higher_flags.n_min)->capture_default_str();
  scan_k->add_option("--n-max", higher_flags.n_max)->capture_default_str();
  scan_k->add_option("--jobs", higher_flags.jobs)->check(CLI::PositiveNumber);
  scan_k->add_option("--max-n", max_n, "Size guard on n")->capture_default_str();

  std::string config_path;
  bool config_dual = false;
  auto* config = app.add_subcommand("config", "Splitting type of a configuration file");
  config->add_option("file", config_path, "One line per configuration line, listing point ids")->required();
  config->add_flag("--dual", config_dual, "Analyse the dual configuration");

  std::uint32_t gray_k = 3, expansions = 0;
  auto* gray = app.add_subcommand("gray", "Print the grid configuration, optionally expanded");
  gray->add_option("--k", gray_k)->capture_default_str();
  gray->add_option("--expand", expansions, "Expansions, each removing the first line")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*counts) {
      const auto rows = compute_class_counts(count_flags.n_min, count_flags.n_max, {count_flags.jobs, count_flags.oracle});
      write_class_counts(std::cout, rows, count_flags.tsv);
    } else if (*survey) {
      auto rows = compute_survey(survey_flags.n_min, survey_flags.n_max, {survey_flags.jobs, survey_flags.oracle});
      if (girth6_only) std::erase_if(rows, [](const SurveyRow& r) { return r.girth != 6; });
      write_survey(std::cout, rows, survey_flags.tsv);
    } else if (*analyze) {
      const NamedGraph g = parse_graph_spec(spec);
      if (dot) {
        write_dot(std::cout, g.graph);
      } else {
        write_analysis(std::cout, g);
      }
    } else if (*verify) {
      const auto checks = verify_theorems(check_options);
      write_checks(std::cout, checks);
      if (std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; })) return kCheckFailed;
    } else if (*scan_cubic) {
      report_scan(scan_cubic_families(cubic_flags.n_min, cubic_flags.n_max, cubic_flags.jobs));
    } else if (*scan_k) {
      report_scan(scan_higher_valency(k, higher_flags.n_min, higher_flags.n_max, higher_flags.jobs, max_n));
    } else if (*config) {
      Configuration c = read_configuration_file(config_path);
      if (config_dual) c = dual(c);
      std::cout << "points: " << c.point_count() << "\nlines: " << c.line_count() << '\n';
      if (auto order = c.balanced_order()) {
        std::cout << "balanced: (" << c.point_count() << "_" << *order << ")\n";
      } else {
        std::cout << "balanced: no\n";
      }
      const TypeReport t = classify(c);
      const ColoredLevi l = levi(c);
      std::cout << "type: " << to_string(t.type) << '\n';
      for (const auto* side : {&t.points, &t.lines}) {
        std::cout << (side == &t.points ? "point" : "line") << "-splitting set: "
                  << (side->splittable() ? format_certificate(l.graph, *side->certificate) : "none") << '\n';
      }
    } else if (*gray) {
      Configuration c = gray_configuration(gray_k);
      for (std::uint32_t i = 0; i < expansions; ++i) c = expand_along_line(c, c.line_ids().front()).configuration;
      write_configuration(std::cout, c);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kCheckFailed;
  }
  return 0;
}
