#include "numhilbert/hilbert.hpp"

#include <map>

namespace nh {

namespace {

void check_corners(std::span<const Monomial> corners, std::size_t nvars) {
  if (nvars == 0) throw std::invalid_argument("need at least one variable");
  if (corners.size() > kMaxHilbertCorners)
    throw CornerLimitError("inclusion-exclusion refuses " + std::to_string(corners.size()) + " corners (limit " +
                           std::to_string(kMaxHilbertCorners) + ")");
  for (const auto& c : corners)
    if (c.nvars() != nvars) throw std::invalid_argument("corner has the wrong number of variables");
}

// Signed subset count per lcm degree: sum over S of (-1)^|S| grouped by deg lcm(S).
void signed_counts(std::span<const Monomial> corners, std::size_t next, const Monomial& acc, int sign,
                   std::map<int, std::int64_t>& out) {
  out[acc.degree()] += sign;
  for (std::size_t k = next; k < corners.size(); ++k) signed_counts(corners, k + 1, lcm(acc, corners[k]), -sign, out);
}

// Coefficients of C(d + a, q) as a polynomial in d.
std::vector<Rational> binomial_polynomial(int a, int q) {
  std::vector<Rational> p{Rational(1)};
  Rational fact(1);
  for (int k = 0; k < q; ++k) {
    // multiply by (d + a - k)
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] += p[i] * (a - k);
    }
    p = std::move(next);
    fact *= k + 1;
  }
  for (auto& c : p) c /= fact;
  return p;
}

}  // namespace

std::int64_t hilbert_value(std::span<const Monomial> gcorners, std::size_t nvars, int d, kernels::Execution exec) {
  check_corners(gcorners, nvars);
  if (d < 0) throw std::invalid_argument("negative degree");
  return kernels::inclusion_exclusion(gcorners, nvars, d, exec);
}

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational HilbertPolynomial::operator()(const Rational& d) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * d + *it;
  return acc;
}

std::string HilbertPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0 || !unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

HilbertPolynomial hilbert_polynomial(std::span<const Monomial> gcorners, std::size_t nvars) {
  check_corners(gcorners, nvars);
  std::map<int, std::int64_t> counts;
  signed_counts(gcorners, 0, Monomial(nvars), 1, counts);
  const int q = static_cast<int>(nvars) - 1;
  std::vector<Rational> total(nvars, Rational(0));
  for (const auto& [deg, count] : counts) {
    if (count == 0) continue;
    auto p = binomial_polynomial(q - deg, q);
    for (std::size_t i = 0; i < p.size(); ++i) total[i] += p[i] * Rational(static_cast<long>(count));
  }
  return HilbertPolynomial(std::move(total));
}

HilbertData hilbert_data(std::span<const Monomial> gcorners, std::size_t nvars) {
  check_corners(gcorners, nvars);
  HilbertData out;
  out.gcorners.assign(gcorners.begin(), gcorners.end());
  const int lcm_degree = lcm(gcorners, nvars).degree();
  out.reported_bound = gcorners.empty() ? 1 : lcm_degree;
  out.tight_bound = lcm_degree - static_cast<int>(nvars) + 1;
  for (int d = 0; d < out.reported_bound; ++d) out.values.push_back(hilbert_value(gcorners, nvars, d));
  out.polynomial = hilbert_polynomial(gcorners, nvars);
  out.dimension = out.polynomial.is_zero() ? -1 : out.polynomial.degree() + 1;
  return out;
}

}  // namespace nh
