#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "numhilbert/dual.hpp"
#include "numhilbert/matrix.hpp"

namespace nh {

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tolerance made a basis vector vanish during lead-term reduction.
class RankDecisionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

enum class RankCut {
  relative,  ///< sigma_i <= tol * sigma_max counts as zero
  absolute,  ///< sigma_i <= tol counts as zero
};

struct KernelResult {
  Eigen::MatrixXcd basis;  ///< orthonormal columns spanning the numerical kernel
  Eigen::VectorXd singular_values;
  double sigma_max = 0.0;
  std::size_t rank = 0;
};

/// Kernel from the right singular vectors whose singular values fall under the cut.
/// Tall matrices are first reduced to their triangular QR factor.
KernelResult numerical_kernel(const Eigen::MatrixXcd& m, double tol, RankCut cut = RankCut::relative);
KernelResult numerical_kernel(const CoefficientMatrix<Complex>& m, double tol, RankCut cut = RankCut::relative);

/// Orthonormal basis of the column space of `vectors`, rank decided with the relative cut.
Eigen::MatrixXcd column_span(const Eigen::MatrixXcd& vectors, double tol);

/// Numerical basis of a subspace of the dual space, stored as a k x N
/// coefficient matrix whose columns are labelled by `columns`.
///
/// When `reduced`, each row has a distinct lead column (its leftmost nonzero),
/// the lead entry is 1 and every other row is zero at that column.
class DualBasis {
 public:
  DualBasis(MonomialIndexPtr columns, Eigen::MatrixXcd coefficients, std::vector<std::size_t> lead_columns,
            int degree, double tol, bool reduced);
  static DualBasis empty(MonomialIndexPtr columns, int degree, double tol);

  std::size_t size() const { return static_cast<std::size_t>(coefficients_.rows()); }
  const MonomialIndex& columns() const { return *columns_; }
  const MonomialIndexPtr& column_index() const { return columns_; }
  const Eigen::MatrixXcd& coefficients() const { return coefficients_; }
  const std::vector<std::size_t>& lead_columns() const { return leads_; }
  int degree() const { return degree_; }
  double tolerance() const { return tol_; }
  bool reduced() const { return reduced_; }

  std::vector<Monomial> lead_monomials() const;
  std::set<Monomial> lead_set() const;

  /// Element i as a sparse functional; entries <= cleanup * max |entry| are dropped.
  DualFunctional<Complex> element(std::size_t i, double cleanup = 0.0) const;
  std::vector<DualFunctional<Complex>> elements(double cleanup = 0.0) const;

  /// Value of element i on f (terms of f beyond the columns contribute nothing).
  Complex apply(std::size_t i, const Polynomial<Complex>& f) const;

  /// Subset of rows, kept in order.
  DualBasis select(const std::vector<std::size_t>& rows) const;

 private:
  MonomialIndexPtr columns_;
  Eigen::MatrixXcd coefficients_;
  std::vector<std::size_t> leads_;
  int degree_;
  double tol_;
  bool reduced_;
};

/// Echelon reduction of the span of `rows` (k x N, independent) over
/// dual-descending column positions.
///
/// Rows are orthonormalized; each column is a pivot when the remaining rows
/// carry Euclidean weight > tol there, and a Householder reflection moves
/// that weight onto one row. Back-substitution then gives unit leads.
/// Throws RankDecisionError if fewer than k pivots are found.
DualBasis reduce_lead_terms(const Eigen::MatrixXcd& rows, MonomialIndexPtr columns, int degree, double tol);
DualBasis reduce_lead_terms(const DualBasis& basis, double tol);

/// Rows of `basis` re-expressed over a larger column index (extra columns are zero).
Eigen::MatrixXcd embed_rows(const DualBasis& basis, const MonomialIndex& target);

}  // namespace nh
