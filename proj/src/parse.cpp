#include "numhilbert/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>

namespace nh {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view s, int line, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = column + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < s.size() && is_digit(s[i + 1]))) {
      std::size_t j = i;
      while (j < s.size() && is_digit(s[j])) ++j;
      if (j < s.size() && s[j] == '.') {
        ++j;
        while (j < s.size() && is_digit(s[j])) ++j;
      }
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && is_digit(s[k])) {
          while (k < s.size() && is_digit(s[k])) ++k;
          j = k;
        }
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && is_ident_char(s[j])) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", column + static_cast<int>(s.size())});
  return out;
}

Rational decimal_to_rational(const std::string& text) {
  std::string mantissa = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exp10 = std::stol(text.substr(e + 1));
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      seen_dot = true;
      continue;
    }
    digits += c;
    if (seen_dot) ++frac;
  }
  mpz_class num(digits.empty() ? "0" : digits, 10);
  exp10 -= frac;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  Rational q = exp10 >= 0 ? Rational(num * p) : Rational(num, p);
  q.canonicalize();
  return q;
}

template <class S>
class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, const std::vector<std::string>& vars, const LocalOrder& order, int line)
      : toks_(std::move(toks)), vars_(vars), order_(order), line_(line) {}

  Polynomial<S> parse() {
    Polynomial<S> p = expr();
    if (peek().kind != Tok::end) fail(peek(), "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  using Traits = ScalarTraits<S>;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  Polynomial<S> expr() {
    Polynomial<S> acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      Polynomial<S> t = term();
      if (minus) acc -= t;
      else acc += t;
    }
    return acc;
  }

  Polynomial<S> term() {
    Polynomial<S> acc = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = take();
      const Token& at = peek();
      Polynomial<S> f = unary();
      if (op.kind == Tok::star) {
        acc = acc * f;
      } else {
        const Monomial one(order_.nvars());
        if (f.is_zero()) fail(at, "division by zero");
        if (f.size() != 1 || f.terms().begin()->first != one) fail(at, "division by a non-constant");
        acc = acc * (Traits::one() / f.coefficient(one));
      }
    }
    if (peek().kind == Tok::number || peek().kind == Tok::ident || peek().kind == Tok::lparen)
      fail(peek(), "implicit multiplication is not allowed; use '*'");
    return acc;
  }

  Polynomial<S> unary() {
    if (peek().kind == Tok::minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      take();
      return unary();
    }
    return power();
  }

  Polynomial<S> power() {
    Polynomial<S> base = primary();
    if (peek().kind != Tok::caret) return base;
    take();
    const Token& e = peek();
    if (e.kind != Tok::number) fail(e, "exponent must be a non-negative integer");
    take();
    int k = 0;
    auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), k);
    if (ec != std::errc() || ptr != e.text.data() + e.text.size() || k > 10000)
      fail(e, "exponent must be a non-negative integer");
    if (peek().kind == Tok::caret) fail(peek(), "chained exponents are ambiguous; use parentheses");
    return base.pow(k);
  }

  Polynomial<S> primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        return Polynomial<S>::constant(order_, literal(t));
      }
      case Tok::ident: {
        take();
        if (t.text == "i" || t.text == "ii") {
          if constexpr (Traits::exact) fail(t, "imaginary unit in an exact-rational input");
          else return Polynomial<S>::constant(order_, Complex(0.0, 1.0));
        }
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) fail(t, "unknown variable '" + t.text + "'");
        return Polynomial<S>::variable(order_, static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        take();
        Polynomial<S> inner = expr();
        if (peek().kind != Tok::rparen) fail(peek(), "expected ')'");
        take();
        return inner;
      }
      case Tok::end:
        fail(t, "unexpected end of expression");
      default:
        fail(t, "unexpected '" + t.text + "'");
    }
  }

  S literal(const Token& t) const {
    if constexpr (Traits::exact) {
      return decimal_to_rational(t.text);
    } else {
      return Complex(std::strtod(t.text.c_str(), nullptr), 0.0);
    }
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& vars_;
  LocalOrder order_;
  int line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, int* shift = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (shift) *shift = static_cast<int>(b);
  return s.substr(b, e - b);
}

struct Piece {
  std::string_view text;
  int column;
};

std::vector<Piece> split_commas(std::string_view s, int column) {
  std::vector<Piece> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      int shift = 0;
      auto t = trim(s.substr(start, i - start), &shift);
      out.push_back({t, column + static_cast<int>(start) + shift});
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

template <class S>
Polynomial<S> parse_polynomial(std::string_view text, const std::vector<std::string>& variables, const LocalOrder& order,
                               int line, int column) {
  if (variables.size() != order.nvars()) throw std::invalid_argument("variable list does not match the order");
  ExprParser<S> p(lex(text, line, column), variables, order, line);
  return p.parse();
}

template Polynomial<Complex> parse_polynomial<Complex>(std::string_view, const std::vector<std::string>&,
                                                       const LocalOrder&, int, int);
template Polynomial<Rational> parse_polynomial<Rational>(std::string_view, const std::vector<std::string>&,
                                                         const LocalOrder&, int, int);

Complex parse_scalar(std::string_view text, int line, int column) {
  // One dummy variable keeps the polynomial machinery happy; no name can reference it.
  const std::vector<std::string> dummy{"\x01"};
  LocalOrder order(1);
  auto p = parse_polynomial<Complex>(text, dummy, order, line, column);
  if (p.is_zero()) return {};
  const Monomial one(1);
  if (p.size() != 1 || p.terms().begin()->first != one) throw ParseError(line, column, "expected a constant");
  return p.coefficient(one);
}

std::vector<Complex> parse_point(std::string_view text, std::size_t arity, int line, int column) {
  std::vector<Complex> out;
  for (const auto& piece : split_commas(text, column)) {
    if (piece.text.empty()) throw ParseError(line, piece.column, "empty coordinate");
    out.push_back(parse_scalar(piece.text, line, piece.column));
  }
  if (out.size() != arity)
    throw ParseError(line, column, "arity mismatch: point has " + std::to_string(out.size()) + " coordinates for " +
                                       std::to_string(arity) + " variables");
  return out;
}

Tiebreak parse_tiebreak(std::string_view text) {
  if (text == "lex") return Tiebreak::lex;
  if (text == "grevlex") return Tiebreak::grevlex;
  throw std::invalid_argument("unknown order '" + std::string(text) + "' (expected lex or grevlex)");
}

SystemSpec parse_system(std::string_view text) {
  struct Deferred {
    std::string text;
    int line;
    int column;
  };
  SystemSpec spec;
  std::optional<Deferred> point;
  std::vector<Deferred> gens;
  std::set<std::string> seen;
  bool in_gens = false;
  int vars_line = 0;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    int indent = 0;
    std::string_view line = trim(raw, &indent);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    // Section header: identifier followed by ':'.
    std::size_t k = 0;
    while (k < line.size() && is_ident_char(line[k])) ++k;
    if (k > 0 && k < line.size() && line[k] == ':') {
      const std::string key(line.substr(0, k));
      int shift = 0;
      std::string_view rest = trim(line.substr(k + 1), &shift);
      const int rest_col = indent + static_cast<int>(k) + 2 + shift;
      if (!seen.insert(key).second) throw ParseError(line_no, indent + 1, "duplicate section '" + key + "'");
      in_gens = false;
      if (key == "vars") {
        vars_line = line_no;
        for (const auto& piece : split_commas(rest, rest_col)) {
          const std::string name(piece.text);
          if (name.empty() || !is_ident_start(name.front()) ||
              !std::all_of(name.begin(), name.end(), is_ident_char))
            throw ParseError(line_no, piece.column, "invalid variable name '" + name + "'");
          if (name == "i" || name == "ii") throw ParseError(line_no, piece.column, "'" + name + "' is the imaginary unit");
          if (std::find(spec.variables.begin(), spec.variables.end(), name) != spec.variables.end())
            throw ParseError(line_no, piece.column, "duplicate variable '" + name + "'");
          spec.variables.push_back(name);
        }
      } else if (key == "point") {
        point = Deferred{std::string(rest), line_no, rest_col};
      } else if (key == "tolerance") {
        const std::string t(rest);
        char* stop = nullptr;
        const double v = std::strtod(t.c_str(), &stop);
        if (t.empty() || *stop != '\0' || !(v > 0.0) || !std::isfinite(v))
          throw ParseError(line_no, rest_col, "tolerance must be a positive number");
        spec.tolerance = v;
      } else if (key == "order") {
        try {
          spec.order = parse_tiebreak(rest);
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, rest_col, e.what());
        }
      } else if (key == "max_degree") {
        int v = -1;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc() || ptr != rest.data() + rest.size() || v < 0)
          throw ParseError(line_no, rest_col, "max_degree must be a non-negative integer");
        spec.max_degree = v;
      } else if (key == "gens") {
        in_gens = true;
        if (!rest.empty()) gens.push_back({std::string(rest), line_no, rest_col});
      } else {
        throw ParseError(line_no, indent + 1, "unknown section '" + key + "'");
      }
    } else if (in_gens) {
      gens.push_back({std::string(line), line_no, indent + 1});
    } else {
      throw ParseError(line_no, indent + 1, "text outside any section");
    }
    if (end == text.size()) break;
  }

  if (spec.variables.empty()) throw ParseError(vars_line ? vars_line : 1, 1, "missing 'vars:' section");
  if (gens.empty()) throw ParseError(line_no, 1, "no generators given");
  const LocalOrder order = spec.local_order();
  for (const auto& g : gens) {
    spec.generators.push_back(parse_polynomial<Complex>(g.text, spec.variables, order, g.line, g.column));
    spec.generator_text.push_back(g.text);
  }
  spec.point = point ? parse_point(point->text, spec.variables.size(), point->line, point->column)
                     : std::vector<Complex>(spec.variables.size());
  return spec;
}

}  // namespace nh
