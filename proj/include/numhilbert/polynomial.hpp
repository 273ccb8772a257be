#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numhilbert/monomial.hpp"
#include "numhilbert/scalar.hpp"

namespace nh {

/// Sparse multivariate polynomial over S (Complex or Rational) with a local order.
///
/// No zero coefficient is ever stored. For Complex coefficients "zero" means
/// exactly zero; use cleaned() to drop coefficients below a tolerance.
template <class S>
class Polynomial {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  using Terms = std::map<Monomial, S>;

  explicit Polynomial(LocalOrder order) : order_(std::move(order)) {}
  Polynomial(LocalOrder order, const Terms& terms) : order_(std::move(order)) {
    for (const auto& [m, c] : terms) add_term(m, c);
  }

  static Polynomial constant(const LocalOrder& order, const S& c) {
    Polynomial p(order);
    p.add_term(Monomial(order.nvars()), c);
    return p;
  }
  static Polynomial term(const LocalOrder& order, const Monomial& m, const S& c = Traits::one()) {
    Polynomial p(order);
    p.add_term(m, c);
    return p;
  }
  static Polynomial variable(const LocalOrder& order, std::size_t i) {
    return term(order, Monomial::variable(order.nvars(), i));
  }

  const LocalOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  void add_term(const Monomial& m, const S& c) {
    if (m.nvars() != nvars()) throw std::invalid_argument("term has wrong variable count");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// in_>(f): the greatest monomial under the local order.
  const Monomial& lead_monomial() const { return lead_entry().first; }
  const S& lead_coefficient() const { return lead_entry().second; }
  /// Degree of the lead monomial, i.e. the lowest total degree present.
  int lead_degree() const { return lead_monomial().degree(); }

  /// Highest total degree of any term.
  int degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Difference between the highest and the lowest term degree.
  int ecart() const { return degree() - lead_degree(); }
  bool is_homogeneous() const { return ecart() == 0; }

  Polynomial operator-() const {
    Polynomial r(order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.order_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const S& s) {
    Polynomial r(a.order_);
    if (Traits::is_zero(s)) return r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
    return r;
  }
  friend Polynomial operator*(const S& s, const Polynomial& a) { return a * s; }
  friend Polynomial operator*(const Polynomial& a, const Monomial& mono) {
    Polynomial r(a.order_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m * mono, c);
    return r;
  }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r = constant(order_, Traits::one());
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const { return order_ == o.order_ && terms_ == o.terms_; }

  /// Scales so the lead coefficient is 1.
  Polynomial normalized() const {
    if (is_zero()) return *this;
    S inv = Traits::one() / lead_coefficient();
    return *this * inv;
  }

  double max_coefficient_magnitude() const {
    double mx = 0.0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, Traits::magnitude(c));
    return mx;
  }

  /// Euclidean norm of the coefficient vector.
  double coefficient_norm() const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) {
      double a = Traits::magnitude(c);
      s += a * a;
    }
    return std::sqrt(s);
  }

  /// Drops coefficients with magnitude <= tol * (largest magnitude). Exact polynomials are returned unchanged.
  Polynomial cleaned(double tol) const {
    if constexpr (Traits::exact) {
      return *this;
    } else {
      Polynomial r(order_);
      double cut = tol * max_coefficient_magnitude();
      for (const auto& [m, c] : terms_)
        if (Traits::magnitude(c) > cut) r.terms_.emplace(m, c);
      return r;
    }
  }

  /// Same terms viewed under a different order on the same variables.
  Polynomial with_order(const LocalOrder& order) const {
    if (order.nvars() != nvars()) throw std::invalid_argument("variable count mismatch");
    Polynomial r(order);
    r.terms_ = terms_;
    return r;
  }

  /// Terms sorted descending under the local order.
  std::vector<std::pair<Monomial, S>> sorted_terms() const {
    std::vector<std::pair<Monomial, S>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order_.compare(a.first, b.first) > 0; });
    return v;
  }

 private:
  const std::pair<const Monomial, S>& lead_entry() const {
    if (is_zero()) throw std::domain_error("lead term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order_.compare(it->first, best->first) > 0) best = it;
    return *best;
  }
  void check_compatible(const Polynomial& o) const {
    if (o.nvars() != nvars()) throw std::invalid_argument("polynomials live in different rings");
  }

  LocalOrder order_;
  Terms terms_;
};

/// Maps every coefficient through `fn` (e.g. Rational -> Complex).
template <class T, class S, class Fn>
Polynomial<T> map_coefficients(const Polynomial<S>& f, Fn&& fn) {
  Polynomial<T> r(f.order());
  for (const auto& [m, c] : f.terms()) r.add_term(m, fn(c));
  return r;
}

inline Polynomial<Complex> to_complex(const Polynomial<Rational>& f) {
  return map_coefficients<Complex>(f, [](const Rational& q) { return to_complex(q); });
}

/// f(x + b): exact expansion of every term by the binomial theorem.
template <class S>
Polynomial<S> translate_to_origin(const Polynomial<S>& f, std::span<const S> point) {
  using Traits = ScalarTraits<S>;
  const std::size_t n = f.nvars();
  if (point.size() != n) throw std::invalid_argument("point has wrong dimension");
  const LocalOrder& order = f.order();
  // shifted[i][k] = (x_i + b_i)^k, grown on demand
  std::vector<std::vector<Polynomial<S>>> shifted(n);
  auto power = [&](std::size_t i, int k) -> const Polynomial<S>& {
    auto& cache = shifted[i];
    if (cache.empty()) cache.push_back(Polynomial<S>::constant(order, Traits::one()));
    while (static_cast<int>(cache.size()) <= k) {
      Polynomial<S> lin = Polynomial<S>::variable(order, i) + Polynomial<S>::constant(order, point[i]);
      cache.push_back(cache.back() * lin);
    }
    return cache[k];
  };
  Polynomial<S> r(order);
  for (const auto& [m, c] : f.terms()) {
    Polynomial<S> t = Polynomial<S>::constant(order, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) t = t * power(i, m[i]);
    r += t;
  }
  return r;
}

template <class S>
struct Homogenized {
  Polynomial<S> poly;  ///< in n+1 variables, homogenizing variable t in slot 0
  int ecart;
};

/// f^h: every term multiplied by the power of t that lifts it to the top degree of f.
template <class S>
Homogenized<S> homogenize(const Polynomial<S>& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  const int top = f.degree();
  Polynomial<S> r(f.order().extended());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(f.nvars() + 1);
    e[0] = top - m.degree();
    std::copy(m.exponents().begin(), m.exponents().end(), e.begin() + 1);
    r.add_term(Monomial(std::move(e)), c);
  }
  int ecart = r.lead_monomial()[0];
  return {std::move(r), ecart};
}

/// psi: sets the homogenizing variable (slot 0) to 1.
template <class S>
Polynomial<S> dehomogenize(const Polynomial<S>& g, const LocalOrder& order) {
  if (g.nvars() != order.nvars() + 1) throw std::invalid_argument("dehomogenize expects one extra variable");
  Polynomial<S> r(order);
  for (const auto& [m, c] : g.terms()) {
    auto e = m.exponents();
    r.add_term(Monomial(std::vector<int>(e.begin() + 1, e.end())), c);
  }
  return r;
}

std::string to_string(const Polynomial<Complex>& f, std::span<const std::string> names);
std::string to_string(const Polynomial<Rational>& f, std::span<const std::string> names);

}  // namespace nh
