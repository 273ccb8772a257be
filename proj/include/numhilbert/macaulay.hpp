#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "numhilbert/kernels.hpp"
#include "numhilbert/linalg.hpp"
#include "numhilbert/polynomial.hpp"

namespace nh {

namespace detail {

template <class S>
const LocalOrder& common_order(std::span<const Polynomial<S>> gens) {
  if (gens.empty()) throw std::invalid_argument("generator set is empty");
  for (const auto& g : gens) {
    if (g.order() != gens.front().order()) throw std::invalid_argument("generators use different orders");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  }
  return gens.front().order();
}

/// Rows x^a * f_g, enumerated by multiplier degree, then generator, then
/// multiplier descending under the local order; `span_of(g)` is the degree
/// that must fit together with |a| into d.
template <class S, class SpanOf>
std::vector<RowLabel> enumerate_rows(std::span<const Polynomial<S>> gens, int d, SpanOf&& span_of) {
  const LocalOrder& order = common_order(gens);
  std::vector<RowLabel> rows;
  for (int k = 0; k <= d; ++k) {
    auto multipliers = monomials_of_degree(order.nvars(), k);
    std::sort(multipliers.begin(), multipliers.end(),
              [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (k + span_of(gens[g]) > d) continue;
      for (const auto& m : multipliers) rows.push_back({g, m});
    }
  }
  return rows;
}

/// Copies of the generators scaled to unit coefficient norm.
std::vector<Polynomial<Complex>> unit_generators(std::span<const Polynomial<Complex>> gens);

}  // namespace detail

/// Macaulay array M(F, d): rows x^a f with |a| + deg in_>(f) <= d, columns the
/// monomials of degree <= d in dual-descending order.
template <class S>
CoefficientMatrix<S> macaulay_array(std::span<const Polynomial<S>> gens, int d,
                                    kernels::Execution exec = kernels::Execution::parallel) {
  if (d < 0) throw std::invalid_argument("negative degree");
  auto rows = detail::enumerate_rows(gens, d, [](const Polynomial<S>& f) { return f.lead_degree(); });
  auto columns = make_index(gens.front().order(), d);
  auto entries = kernels::assemble_rows<S>(rows, gens, *columns, exec);
  return {std::move(entries), std::move(rows), std::move(columns)};
}

/// Reduced numerical basis of the truncated dual space: the kernel of M(F, d).
DualBasis truncated_dual(std::span<const Polynomial<Complex>> gens, int d, double tol);

}  // namespace nh
