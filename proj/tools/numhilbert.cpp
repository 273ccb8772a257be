#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "numhilbert/dualinfo.hpp"
#include "numhilbert/hilbert.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kNumericalFailure = 3;
constexpr int kNotOnVariety = 4;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local dual spaces, g-corners and Hilbert functions of polynomial systems"};
  app.require_subcommand(1);

  auto* dualinfo = app.add_subcommand("dualinfo", "Analyse a system at a point");
  std::string input;
  std::string point_text;
  double tolerance = 0.0;
  std::string strategy = "mourrain";
  std::string order;
  std::string output = "text";
  int max_degree = -1;
  bool with_sbasis = false;
  dualinfo->add_option("input", input, "System file ('-' reads stdin)")->required();
  dualinfo->add_option("--point", point_text, "Comma-separated coordinates, overriding the file");
  dualinfo->add_option("--tolerance", tolerance, "Numerical tolerance, overriding the file")
      ->check(CLI::PositiveNumber);
  dualinfo->add_option("--strategy", strategy, "Sylvester dual computation")
      ->check(CLI::IsMember({"sylvester", "mourrain"}));
  dualinfo->add_flag("--standard-basis", with_sbasis, "Also recover a reduced standard basis");
  dualinfo->add_option("--max-degree", max_degree, "Hard cap on the search degree")->check(CLI::NonNegativeNumber);
  dualinfo->add_option("--order", order, "Tie-break of the local order")->check(CLI::IsMember({"lex", "grevlex"}));
  dualinfo->add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  std::string text;
  try {
    text = read_input(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    const nh::SystemSpec spec = nh::parse_system(text);
    nh::DualInfoOptions opts;
    if (!point_text.empty()) opts.point = nh::parse_point(point_text, spec.variables.size());
    if (tolerance > 0.0) opts.tolerance = tolerance;
    if (!order.empty()) opts.order = nh::parse_tiebreak(order);
    if (max_degree >= 0) opts.max_degree = max_degree;
    opts.strategy = strategy == "sylvester" ? nh::Strategy::sylvester : nh::Strategy::mourrain;
    opts.standard_basis = with_sbasis;
    const nh::DualInfoReport report = nh::dualinfo_run(spec, opts);
    std::cout << (output == "json" ? nh::format_json(report) : nh::format_text(report));
    return kOk;
  } catch (const nh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const nh::PointNotOnVariety& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotOnVariety;
  } catch (const nh::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const nh::CornerLimitError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
}
