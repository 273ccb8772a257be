#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "numhilbert/polynomial.hpp"

namespace nh {

/// Element of the dual space: a finite combination of coefficient-extraction
/// functionals d^a, where d^a(sum c_b x^b) = c_a.
///
/// Dual monomials are ordered by the reverse of the local order, so the lead
/// term is the highest-degree dual monomial.
template <class S>
class DualFunctional {
 public:
  using Traits = ScalarTraits<S>;
  using Terms = std::map<Monomial, S>;

  explicit DualFunctional(LocalOrder order) : order_(std::move(order)) {}
  DualFunctional(LocalOrder order, const Terms& terms) : order_(std::move(order)) {
    for (const auto& [m, c] : terms) add_term(m, c);
  }
  static DualFunctional monomial(const LocalOrder& order, const Monomial& m, const S& c = Traits::one()) {
    DualFunctional p(order);
    p.add_term(m, c);
    return p;
  }

  const LocalOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  void add_term(const Monomial& m, const S& c) {
    if (m.nvars() != nvars()) throw std::invalid_argument("dual term has wrong variable count");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// in_succ(p): greatest dual monomial, i.e. the smallest monomial under >.
  const Monomial& lead_monomial() const {
    if (is_zero()) throw std::domain_error("lead term of the zero functional");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order_.compare_dual(it->first, best->first) > 0) best = it;
    return best->first;
  }
  S lead_coefficient() const { return coefficient(lead_monomial()); }
  int degree() const { return lead_monomial().degree(); }

  /// Sum over dual terms d^a of coef(d^a) * coef of x^a in f.
  S apply(const Polynomial<S>& f) const {
    if (f.nvars() != nvars()) throw std::invalid_argument("functional and polynomial in different rings");
    S acc = Traits::zero();
    const auto& small = terms_.size() <= f.terms().size() ? terms_ : f.terms();
    const auto& large = terms_.size() <= f.terms().size() ? f.terms() : terms_;
    for (const auto& [m, c] : small) {
      auto it = large.find(m);
      if (it != large.end()) acc += c * it->second;
    }
    return acc;
  }

  /// d_i: d^a -> d^a / d_i when d_i divides d^a, otherwise the term is dropped.
  DualFunctional derivative(std::size_t i) const {
    if (i >= nvars()) throw std::out_of_range("variable index out of range");
    DualFunctional r(order_);
    for (const auto& [m, c] : terms_)
      if (m[i] > 0) r.terms_.emplace(m.shifted(i, -1), c);
    return r;
  }

  DualFunctional& operator+=(const DualFunctional& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  friend DualFunctional operator*(const S& s, const DualFunctional& p) {
    DualFunctional r(p.order_);
    for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
    return r;
  }

  DualFunctional normalized() const {
    if (is_zero()) return *this;
    return (Traits::one() / lead_coefficient()) * *this;
  }

  DualFunctional cleaned(double tol) const {
    if constexpr (Traits::exact) {
      return *this;
    } else {
      double mx = 0.0;
      for (const auto& [m, c] : terms_) mx = std::max(mx, Traits::magnitude(c));
      DualFunctional r(order_);
      for (const auto& [m, c] : terms_)
        if (Traits::magnitude(c) > tol * mx) r.terms_.emplace(m, c);
      return r;
    }
  }

  /// Terms sorted descending in the dual order (lead first).
  std::vector<std::pair<Monomial, S>> sorted_terms() const {
    std::vector<std::pair<Monomial, S>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return order_.compare_dual(a.first, b.first) > 0; });
    return v;
  }

 private:
  LocalOrder order_;
  Terms terms_;
};

template <class S>
S dual_apply(const DualFunctional<S>& p, const Polynomial<S>& f) {
  return p.apply(f);
}

template <class S>
DualFunctional<S> dual_derivative(std::size_t i, const DualFunctional<S>& p) {
  return p.derivative(i);
}

/// Renders in d-variable notation, e.g. "dy^3 + dx"; names get a "d" prefix.
std::string to_string(const DualFunctional<Complex>& p, std::span<const std::string> names);
std::string to_string(const DualFunctional<Rational>& p, std::span<const std::string> names);

}  // namespace nh
