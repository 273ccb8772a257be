#pragma once

#include <span>

#include "numhilbert/macaulay.hpp"

namespace nh {

/// Sylvester array S(F, d): rows x^a f such that every term has degree <= d.
/// Its rows are a subset of the rows of M(F, d).
template <class S>
CoefficientMatrix<S> sylvester_array(std::span<const Polynomial<S>> gens, int d,
                                     kernels::Execution exec = kernels::Execution::parallel) {
  if (d < 0) throw std::invalid_argument("negative degree");
  auto rows = detail::enumerate_rows(gens, d, [](const Polynomial<S>& f) { return f.degree(); });
  auto columns = make_index(gens.front().order(), d);
  auto entries = kernels::assemble_rows<S>(rows, gens, *columns, exec);
  return {std::move(entries), std::move(rows), std::move(columns)};
}

/// Reduced basis of the Sylvester dual (kernel of S(F, d)). Depends on the
/// generators, not only on the ideal, and is not nested in d.
DualBasis sylvester_dual(std::span<const Polynomial<Complex>> gens, int d, double tol);

/// Elements of a reduced Sylvester dual at degree d whose lead has degree
/// <= d - e, where e is the largest ecart of the generators. These span the
/// truncated dual of the ideal at degree d - e.
DualBasis embedded_truncated_dual(const DualBasis& sdual, int max_ecart);

/// Largest ecart over the generators.
template <class S>
int max_ecart(std::span<const Polynomial<S>> gens) {
  int e = 0;
  for (const auto& g : gens) e = std::max(e, g.ecart());
  return e;
}

}  // namespace nh
