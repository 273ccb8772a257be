#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP implementation and a
// plain serial reference; tests require both to produce identical results.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "numhilbert/matrix.hpp"
#include "numhilbert/polynomial.hpp"

namespace nh::kernels {

enum class Execution { serial, parallel };

/// Coefficient block for rows x^a * f_g over the given columns; terms outside the columns are dropped.
template <class S>
DenseMatrix<S> assemble_rows(std::span<const RowLabel> rows, std::span<const Polynomial<S>> gens,
                             const MonomialIndex& columns, Execution exec) {
  DenseMatrix<S> out(rows.size(), columns.size());
  if (exec == Execution::serial) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Polynomial<S> row = gens[rows[r].generator] * rows[r].multiplier;
      for (const auto& [m, c] : row.terms())
        if (auto col = columns.find(m)) out(r, *col) = c;
    }
    return out;
  }
  const auto nrows = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t r = 0; r < nrows; ++r) {
    const RowLabel& label = rows[r];
    for (const auto& [m, c] : gens[label.generator].terms()) {
      Monomial shifted = m * label.multiplier;
      if (shifted.degree() > columns.max_degree()) continue;
      out(r, columns.at(shifted)) = c;
    }
  }
  return out;
}

/// C(p, q) with the convention C(p, q) = 0 for p < q (and for p < 0).
std::int64_t binomial(std::int64_t p, std::int64_t q);

/// Sum over subsets S of the corners of (-1)^|S| C(d - deg lcm(S) + n - 1, n - 1).
std::int64_t inclusion_exclusion(std::span<const Monomial> corners, std::size_t nvars, int degree, Execution exec);

/// Commutation constraints of the integration method.
///
/// mu[i] is r x g: mu[i](j, m) is the coordinate of d_i(beta_j) on the m-th
/// target basis element. Returns one row per (i < l, m) with columns indexed
/// i * r + j, encoding sum_j (lambda^l_j mu^i_{j,m} - lambda^i_j mu^l_{j,m}) = 0.
Eigen::MatrixXcd commutation_rows(std::span<const Eigen::MatrixXcd> mu, Execution exec);

}  // namespace nh::kernels
