#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "syzflip/error.hpp"
#include "syzflip_cli/commands.hpp"
#include "syzflip_cli/input.hpp"

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace syzflip::cli;
  CLI::App app{"Exact syzygy, secant and vanishing computations for projective varieties"};
  CommandOptions opt;
  std::string command;
  std::string input_path;
  std::string field = "q";
  std::string out_path;
  std::string format = "json";
  std::string twists;
  std::vector<long> n_r_e_d;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("input", input_path, "Input file ('-' for stdin)");
  app.add_option("--seed", opt.seed, "Seed for every sampled quantity");
  app.add_option("--degree-cap", opt.degree_cap, "Largest S-pair degree before aborting");
  app.add_option("--trials", opt.trials, "Sampled trials for randomized checks");
  app.add_option("--field", field, "q or gfp:<p>");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opt.timing, "Add wall-clock milliseconds to the report");
  app.add_option("--ideal", opt.ideal, "Name of the ideal (default: the first declared)");
  app.add_option("--point", opt.point, "Name of the point (default: the first declared)");
  app.add_option("--degree", opt.degree, "Generator degree for check-kd and vanish-scan");
  app.add_option("--bound", opt.normality_bound, "Normality degree bound for check-n2");
  app.add_option("--powers", opt.powers, "Powers a of the ideal sheaf")->delimiter(',');
  app.add_option("--window", opt.window, "Twists scanned beyond the bound");
  app.add_option("--variant", opt.variant, "little or second (vanish-scan)");
  app.add_option("--twists", twists, "lo:hi twist range for cohomology");
  app.add_option("--order", opt.order, "grevlex or lex (gb)");
  app.add_option("--n", opt.n, "Ambient dimension (thresholds; complete-intersection corpus)");
  app.add_option("--r", opt.r, "Dimension of X (thresholds)");
  app.add_option("--e", opt.e, "Codimension of X (thresholds)");
  app.add_option("--d", opt.d, "Generator degree (thresholds)");
  app.add_option("--family", opt.family, "Corpus family");
  app.add_option("--params", opt.params, "Corpus family parameters")->delimiter(',');
  app.add_flag("--corpus", opt.corpus, "report-all over the built-in corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    opt.field = parse_field(field);
    if (!twists.empty()) {
      const auto colon = twists.find(':');
      if (colon == std::string::npos) throw syzflip::InvalidArgument("bad_twists", "--twists takes lo:hi");
      opt.twist_low = std::stol(twists.substr(0, colon));
      opt.twist_high = std::stol(twists.substr(colon + 1));
    }
  } catch (const syzflip::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error [bad_twists]: " << e.what() << "\n";
    return kExitInput;
  }

  std::string text;
  if (!input_path.empty()) {
    if (input_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream in(input_path, std::ios::binary);
      if (!in) {
        std::cerr << "error [io]: cannot read " << input_path << "\n";
        return kExitInput;
      }
      text = read_all(in);
    }
  } else if (needs_input(command, opt)) {
    std::cerr << "error [missing_input]: " << command << " needs an input file\n";
    return kExitInput;
  }

  const Outcome outcome = run_command(command, text, opt);
  const std::string rendered = render(outcome, format);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << rendered;
    if (!out) {
      std::cerr << "error [io]: cannot write " << out_path << "\n";
      return kExitInput;
    }
  }
  if (outcome.report.contains("error")) {
    std::cerr << "error [" << outcome.report["error"]["code"].get<std::string>()
              << "]: " << outcome.report["error"]["message"].get<std::string>() << "\n";
  }
  return outcome.exit_code;
}
