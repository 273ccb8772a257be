#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace nh {

/// Exponent vector x^a = x_1^a_1 ... x_n^a_n with cached total degree.
///
/// The defaulted comparison is a plain storage order (exponent-lexicographic)
/// used for map keys; it is not a monomial order. Use LocalOrder for that.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  /// this | other
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws std::invalid_argument unless divisor | *this.
  Monomial operator/(const Monomial& divisor) const;

  /// Raise exponent i by k (k may be negative as long as the result stays >= 0).
  Monomial shifted(std::size_t i, int k) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  /// Renders e.g. "x^2*y" using the given names; the constant monomial is "1".
  std::string to_string(std::span<const std::string> names, const std::string& prefix = "") const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial lcm(std::span<const Monomial> ms, std::size_t nvars);

/// Tie-break between monomials of equal total degree.
enum class Tiebreak { lex, grevlex };

/// Anti-graded local order: lower total degree is greater, so 1 > x_i.
///
/// Ties are broken by lex (x_1 > x_2 > ... > x_n) or by grevlex (smaller
/// exponent in the last differing variable wins). An order built with `leading_t` treats variable 0 as a
/// homogenizing variable: among equal total degree, larger t-exponent wins and
/// the remaining variables are compared with the tie-break.
class LocalOrder {
 public:
  explicit LocalOrder(std::size_t nvars, Tiebreak tiebreak = Tiebreak::lex, bool leading_t = false);

  std::size_t nvars() const { return nvars_; }
  Tiebreak tiebreak() const { return tiebreak_; }
  bool leading_t() const { return leading_t_; }

  /// Compares a and b under >. Throws std::invalid_argument on a variable-count mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// Compares the dual monomials of a and b under the reversed order.
  std::strong_ordering compare_dual(const Monomial& a, const Monomial& b) const { return compare(b, a); }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Order on n+1 variables with the homogenizing variable t in slot 0.
  LocalOrder extended() const;

  bool operator==(const LocalOrder&) const = default;

 private:
  std::size_t nvars_;
  Tiebreak tiebreak_;
  bool leading_t_;
};

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// All monomials of degree <= max_degree, sorted descending in the dual
/// order (highest degree first), so the leftmost nonzero entry of a
/// coefficient row is the dual lead term.
std::vector<Monomial> monomials_up_to(const LocalOrder& order, int max_degree);

/// Column labels for coefficient matrices: monomials up to a degree in dual-descending order.
class MonomialIndex {
 public:
  MonomialIndex(const LocalOrder& order, int max_degree);

  const LocalOrder& order() const { return order_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> find(const Monomial& m) const;
  std::size_t at(const Monomial& m) const;

 private:
  LocalOrder order_;
  int max_degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

using MonomialIndexPtr = std::shared_ptr<const MonomialIndex>;

inline MonomialIndexPtr make_index(const LocalOrder& order, int max_degree) {
  return std::make_shared<const MonomialIndex>(order, max_degree);
}

/// Default variable names x1..xn.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace nh
