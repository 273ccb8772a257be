#include "numhilbert/polynomial.hpp"

#include "numhilbert/dual.hpp"

#include <cstdio>

namespace nh {

namespace {

std::string real_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Appends "sign magnitude*monomial" for one term; `negative` selects the sign.
void append_term(std::string& out, bool first, bool negative, const std::string& magnitude, const Monomial& m,
                 std::span<const std::string> names, const std::string& prefix = "") {
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (m.is_one()) {
    out += magnitude;
  } else {
    if (magnitude != "1") out += magnitude + '*';
    out += m.to_string(names, prefix);
  }
}

template <class Terms>
std::string render_rational(const Terms& terms, std::span<const std::string> names, const std::string& prefix) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = abs(c);
    append_term(out, first, sgn(c) < 0, a.get_str(), m, names, prefix);
    first = false;
  }
  return out;
}

template <class Terms>
std::string render_complex(const Terms& terms, std::span<const std::string> names, const std::string& prefix) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (c.imag() == 0.0) {
      append_term(out, first, std::signbit(c.real()), real_text(std::abs(c.real())), m, names, prefix);
    } else {
      append_term(out, first, false, format_scalar(c), m, names, prefix);
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string format_scalar(const Rational& q) { return q.get_str(); }

std::string format_scalar(const Complex& c) {
  if (c.imag() == 0.0) return real_text(c.real());
  if (c.real() == 0.0) return real_text(c.imag()) + "*i";
  std::string im = real_text(c.imag());
  if (im.front() != '-') im = "+" + im;
  return "(" + real_text(c.real()) + im + "*i)";
}

std::string to_string(const Polynomial<Rational>& f, std::span<const std::string> names) {
  return render_rational(f.sorted_terms(), names, "");
}

std::string to_string(const Polynomial<Complex>& f, std::span<const std::string> names) {
  return render_complex(f.sorted_terms(), names, "");
}

std::string to_string(const DualFunctional<Rational>& p, std::span<const std::string> names) {
  return render_rational(p.sorted_terms(), names, "d");
}

std::string to_string(const DualFunctional<Complex>& p, std::span<const std::string> names) {
  return render_complex(p.sorted_terms(), names, "d");
}

}  // namespace nh
