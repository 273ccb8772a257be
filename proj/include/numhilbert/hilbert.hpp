#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numhilbert/kernels.hpp"
#include "numhilbert/monomial.hpp"
#include "numhilbert/scalar.hpp"

namespace nh {

/// Inclusion-exclusion is exponential in the corner count; larger inputs are refused.
inline constexpr std::size_t kMaxHilbertCorners = 20;

class CornerLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Number of degree-d monomials in n variables divisible by none of the corners.
std::int64_t hilbert_value(std::span<const Monomial> gcorners, std::size_t nvars, int d,
                           kernels::Execution exec = kernels::Execution::parallel);

/// Polynomial in d with exact rational coefficients, lowest power first.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& d) const;

  /// e.g. "d + 3", "1/2*d^2 + 3/2*d + 1", "0".
  std::string to_string(const std::string& var = "d") const;

 private:
  std::vector<Rational> coeffs_;
};

struct HilbertData {
  std::vector<Monomial> gcorners;
  std::vector<std::int64_t> values;  ///< H(0), ..., H(reported_bound - 1)
  int reported_bound = 1;            ///< deg lcm of all corners (1 with no corners)
  int tight_bound = 0;               ///< deg lcm - n + 1; the polynomial is exact from here on
  HilbertPolynomial polynomial;
  int dimension = -1;                ///< -1 encodes an isolated point
};

/// Hilbert polynomial of the staircase: agrees with hilbert_value for d >= deg lcm - n + 1.
HilbertPolynomial hilbert_polynomial(std::span<const Monomial> gcorners, std::size_t nvars);

HilbertData hilbert_data(std::span<const Monomial> gcorners, std::size_t nvars);

}  // namespace nh
