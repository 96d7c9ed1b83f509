#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcnet/scenario.hpp"

using namespace dcnet;

namespace {

int run_command(const std::string& file, const std::string& inline_text,
                const std::string& format, const std::string& stats_path,
                int trials_override, int parallel) {
  std::string text;
  if (!inline_text.empty()) {
    text = inline_text;
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot read " << file << "\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  Scenario sc;
  try {
    sc = parse_scenario(text);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (trials_override > 0) sc.trials = trials_override;

  RunReport report;
  try {
    report = execute(sc, parallel > 0, parallel);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << (format == "records" ? render_records(report)
                                    : render_text(report));
  if (!stats_path.empty()) {
    std::ofstream stats(stats_path);
    if (!stats) {
      std::cerr << "error: cannot write " << stats_path << "\n";
      return 1;
    }
    stats << render_stats_csv(report);
  }
  return report.all_completed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic multiparty protocol simulator"};
  app.require_subcommand(1);

  std::string file;
  std::string inline_text;
  std::string format = "text";
  std::string stats_path;
  int trials_override = 0;
  int parallel = 0;

  CLI::App* run = app.add_subcommand("run", "run a scenario");
  CLI::Option* file_opt = run->add_option("file", file, "scenario file");
  CLI::Option* inline_opt =
      run->add_option("--inline", inline_text, "scenario text");
  file_opt->excludes(inline_opt);
  run->add_option("--format", format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));
  run->add_option("--stats", stats_path, "write frequency tables to a CSV");
  run->add_option("--trials", trials_override, "override the trial count")
      ->check(CLI::PositiveNumber);
  run->add_option("--parallel", parallel, "run trials on this many workers")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (file.empty() && inline_text.empty()) {
    std::cerr << "error: need a scenario file or --inline text" << "\n";
    return 1;
  }
  return run_command(file, inline_text, format, stats_path, trials_override,
                     parallel);
}
