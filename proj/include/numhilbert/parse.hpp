#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numhilbert/polynomial.hpp"

namespace nh {

/// Syntax or semantic error in system text, positioned at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// Parses one polynomial over the named variables. `line` and `column` give
/// the position of the first character for error reporting. Exact parsing
/// reads decimal literals as rationals and rejects the imaginary unit.
template <class S>
Polynomial<S> parse_polynomial(std::string_view text, const std::vector<std::string>& variables, const LocalOrder& order,
                               int line = 1, int column = 1);

/// A constant expression such as "-1.0-.53734e-17*i".
Complex parse_scalar(std::string_view text, int line = 1, int column = 1);

/// Comma-separated constant expressions; throws unless there are exactly `arity` of them.
std::vector<Complex> parse_point(std::string_view text, std::size_t arity, int line = 1, int column = 1);

struct SystemSpec {
  std::vector<std::string> variables;
  std::vector<Polynomial<Complex>> generators;
  std::vector<std::string> generator_text;  ///< source text of each generator
  std::vector<Complex> point;               ///< origin unless given
  double tolerance = 1e-4;
  Tiebreak order = Tiebreak::lex;
  std::optional<int> max_degree;

  LocalOrder local_order() const { return LocalOrder(variables.size(), order); }
};

/// Sections "vars:", "point:", "tolerance:", "order:", "max_degree:", "gens:"
/// (one generator per line); "#" starts a comment.
SystemSpec parse_system(std::string_view text);

Tiebreak parse_tiebreak(std::string_view text);

}  // namespace nh
