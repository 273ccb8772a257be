#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "numhilbert/monomial.hpp"
#include "numhilbert/scalar.hpp"

namespace nh {

/// Row-major dense matrix over any scalar; used where Eigen does not fit (exact rationals).
template <class S>
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<S> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, ScalarTraits<S>::zero()) {}

  S& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// A row x^a * f_g of a Macaulay or Sylvester array.
struct RowLabel {
  std::size_t generator;
  Monomial multiplier;
  bool operator==(const RowLabel&) const = default;
};

/// Coefficient matrix: entry (i, j) is the coefficient of column monomial j in row polynomial i.
template <class S>
struct CoefficientMatrix {
  DenseMatrix<S> entries;
  std::vector<RowLabel> row_labels;
  MonomialIndexPtr columns;

  std::size_t rows() const { return entries.rows; }
  std::size_t cols() const { return entries.cols; }
};

inline Eigen::MatrixXcd to_eigen(const DenseMatrix<Complex>& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

inline DenseMatrix<Complex> to_complex(const DenseMatrix<Rational>& m) {
  DenseMatrix<Complex> out(m.rows, m.cols);
  for (std::size_t k = 0; k < m.data.size(); ++k) out.data[k] = to_complex(m.data[k]);
  return out;
}

}  // namespace nh
