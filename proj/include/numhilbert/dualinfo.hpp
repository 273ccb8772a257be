#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numhilbert/gcorner.hpp"
#include "numhilbert/hilbert.hpp"
#include "numhilbert/parse.hpp"

namespace nh {

struct DualInfoOptions {
  std::optional<std::vector<Complex>> point;
  std::optional<double> tolerance;
  std::optional<Tiebreak> order;
  std::optional<int> max_degree;
  Strategy strategy = Strategy::mourrain;
  bool standard_basis = false;
  kernels::Execution exec = kernels::Execution::parallel;
};

struct DualInfoReport {
  std::vector<std::string> variables;
  std::vector<Complex> point;
  double tolerance = 0.0;
  Tiebreak order = Tiebreak::lex;
  Strategy strategy = Strategy::mourrain;

  std::vector<GCornerRecord> records;
  int last_degree = 0;
  int d_max = 0;
  bool truncated = false;
  std::vector<std::size_t> sylvester_dimensions;

  /// Truncated dual at degree (last degree - max ecart), read off the last Sylvester dual.
  int dual_degree = 0;
  std::vector<DualFunctional<Complex>> dual_basis;

  HilbertData hilbert;
  std::optional<std::vector<Polynomial<Complex>>> standard_basis;
};

/// Translate to the point, search for g-corners, derive the Hilbert data and
/// optionally a standard basis (expressed in coordinates centred at the point).
DualInfoReport dualinfo_run(const SystemSpec& spec, const DualInfoOptions& options = {});

std::string format_text(const DualInfoReport& report);
/// Indented JSON; identical input gives identical bytes.
std::string format_json(const DualInfoReport& report);

const char* to_string(Strategy s);
const char* to_string(Tiebreak t);

}  // namespace nh
