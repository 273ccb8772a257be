#include "numhilbert/linalg.hpp"

#include <cmath>
#include <complex>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace nh {

namespace {

void require_finite(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw NumericalError("matrix has non-finite entries");
}

// a = U diag(s) V^H with square U and V. Divide and conquer first, QR iteration if that fails.
struct Svd {
  Eigen::VectorXd s;
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd v;
};

Svd full_svd(const Eigen::MatrixXcd& a) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  Svd out;
  out.s.resize(std::min(m, n));
  out.u.resize(m, m);
  Eigen::MatrixXcd vt(n, n);
  Eigen::MatrixXcd work = a;
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'A', m, n, work.data(), std::max(m, 1), out.s.data(),
                                   out.u.data(), std::max(m, 1), vt.data(), std::max(n, 1));
  if (info != 0) {
    work = a;
    std::vector<double> superb(static_cast<std::size_t>(std::max(std::min(m, n) - 1, 1)));
    info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'A', 'A', m, n, work.data(), std::max(m, 1), out.s.data(), out.u.data(),
                          std::max(m, 1), vt.data(), std::max(n, 1), superb.data());
  }
  if (info != 0) throw NumericalError("singular value decomposition failed (info " + std::to_string(info) + ")");
  out.v = vt.adjoint();
  return out;
}

// Householder QR through LAPACK: reflectors packed below the diagonal, R on and above it.
struct Qr {
  Eigen::MatrixXcd packed;
  Eigen::VectorXcd tau;

  explicit Qr(const Eigen::MatrixXcd& a) : packed(a), tau(std::min(a.rows(), a.cols())) {
    const auto m = static_cast<lapack_int>(a.rows());
    const auto n = static_cast<lapack_int>(a.cols());
    if (m == 0 || n == 0) return;
    const lapack_int info = LAPACKE_zgeqrf(LAPACK_COL_MAJOR, m, n, packed.data(), m, tau.data());
    if (info != 0) throw NumericalError("QR factorization failed (info " + std::to_string(info) + ")");
  }

  // Leading k rows of R.
  Eigen::MatrixXcd r(Eigen::Index k) const { return packed.topRows(k).triangularView<Eigen::Upper>(); }
  Eigen::VectorXd r_diagonal() const { return packed.diagonal().cwiseAbs(); }

  // First `cols` columns of the unitary factor (cols <= rows).
  Eigen::MatrixXcd q(Eigen::Index cols) const {
    const Eigen::Index m = packed.rows();
    const Eigen::Index k = std::min(tau.size(), cols);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, cols);
    out.leftCols(k) = packed.leftCols(k);
    if (m == 0 || cols == 0) return out;
    const lapack_int info = LAPACKE_zungqr(LAPACK_COL_MAJOR, static_cast<lapack_int>(m), static_cast<lapack_int>(cols),
                                           static_cast<lapack_int>(k), out.data(), static_cast<lapack_int>(m),
                                           tau.data());
    if (info != 0) throw NumericalError("forming Q failed (info " + std::to_string(info) + ")");
    return out;
  }
};

std::size_t count_above(const Eigen::VectorXd& sv, double cut) {
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

}  // namespace

KernelResult numerical_kernel(const Eigen::MatrixXcd& a, double tol, RankCut cut) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  require_finite(a);
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  KernelResult out;
  if (n == 0) {
    out.basis.resize(0, 0);
    return out;
  }
  if (m == 0) {
    out.basis = Eigen::MatrixXcd::Identity(n, n);
    return out;
  }

  if (m >= n) {
    const Svd svd = full_svd(Qr(a).r(n));
    out.singular_values = svd.s;
    out.sigma_max = out.singular_values.size() ? out.singular_values(0) : 0.0;
    const double threshold = cut == RankCut::relative ? tol * out.sigma_max : tol;
    out.rank = count_above(out.singular_values, threshold);
    out.basis = svd.v.rightCols(n - static_cast<Eigen::Index>(out.rank));
    return out;
  }

  // Wide: A^H = Q R, so A = R^H Q1^H and the right singular vectors of A are Q1 W
  // for the SVD R^H = U S W^H; the trailing columns of Q span the rest of the kernel.
  const Qr qr(a.adjoint());
  const Eigen::MatrixXcd q = qr.q(n);
  const Eigen::MatrixXcd rh = qr.r(m).adjoint();
  const Svd svd = full_svd(rh);
  out.singular_values = svd.s;
  out.sigma_max = out.singular_values.size() ? out.singular_values(0) : 0.0;
  const double threshold = cut == RankCut::relative ? tol * out.sigma_max : tol;
  out.rank = count_above(out.singular_values, threshold);
  const Eigen::Index null_in_range = m - static_cast<Eigen::Index>(out.rank);
  out.basis.resize(n, null_in_range + (n - m));
  out.basis.leftCols(null_in_range) = q.leftCols(m) * svd.v.rightCols(null_in_range);
  out.basis.rightCols(n - m) = q.rightCols(n - m);
  return out;
}

KernelResult numerical_kernel(const CoefficientMatrix<Complex>& m, double tol, RankCut cut) {
  return numerical_kernel(to_eigen(m.entries), tol, cut);
}

Eigen::MatrixXcd column_span(const Eigen::MatrixXcd& vectors, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  require_finite(vectors);
  const Eigen::Index n = vectors.rows();
  const Eigen::Index k = vectors.cols();
  if (k == 0 || n == 0) return Eigen::MatrixXcd(n, 0);
  Eigen::MatrixXcd q;
  Eigen::MatrixXcd small;
  if (n >= k) {
    const Qr qr(vectors);
    q = qr.q(k);
    small = qr.r(k);
  } else {
    q = Eigen::MatrixXcd::Identity(n, n);
    small = vectors;
  }
  const Svd svd = full_svd(small);
  const Eigen::VectorXd& sv = svd.s;
  const double sigma_max = sv.size() ? sv(0) : 0.0;
  const auto rank = static_cast<Eigen::Index>(count_above(sv, tol * sigma_max));
  return q * svd.u.leftCols(rank);
}

DualBasis::DualBasis(MonomialIndexPtr columns, Eigen::MatrixXcd coefficients, std::vector<std::size_t> lead_columns,
                     int degree, double tol, bool reduced)
    : columns_(std::move(columns)),
      coefficients_(std::move(coefficients)),
      leads_(std::move(lead_columns)),
      degree_(degree),
      tol_(tol),
      reduced_(reduced) {
  if (static_cast<std::size_t>(coefficients_.cols()) != columns_->size())
    throw std::invalid_argument("dual basis width does not match its column index");
  if (leads_.size() != size()) throw std::invalid_argument("one lead column per element required");
}

DualBasis DualBasis::empty(MonomialIndexPtr columns, int degree, double tol) {
  const auto n = static_cast<Eigen::Index>(columns->size());
  return DualBasis(std::move(columns), Eigen::MatrixXcd(0, n), {}, degree, tol, true);
}

std::vector<Monomial> DualBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(leads_.size());
  for (std::size_t c : leads_) out.push_back((*columns_)[c]);
  return out;
}

std::set<Monomial> DualBasis::lead_set() const {
  std::set<Monomial> out;
  for (std::size_t c : leads_) out.insert((*columns_)[c]);
  return out;
}

DualFunctional<Complex> DualBasis::element(std::size_t i, double cleanup) const {
  const auto row = coefficients_.row(static_cast<Eigen::Index>(i));
  const double cut = cleanup * row.cwiseAbs().maxCoeff();
  DualFunctional<Complex> p(columns_->order());
  for (Eigen::Index j = 0; j < row.size(); ++j)
    if (std::abs(row(j)) > cut && row(j) != Complex{}) p.add_term((*columns_)[j], row(j));
  return p;
}

std::vector<DualFunctional<Complex>> DualBasis::elements(double cleanup) const {
  std::vector<DualFunctional<Complex>> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i, cleanup));
  return out;
}

Complex DualBasis::apply(std::size_t i, const Polynomial<Complex>& f) const {
  Complex acc{};
  for (const auto& [m, c] : f.terms())
    if (auto col = columns_->find(m)) acc += coefficients_(static_cast<Eigen::Index>(i), *col) * c;
  return acc;
}

DualBasis DualBasis::select(const std::vector<std::size_t>& rows) const {
  Eigen::MatrixXcd sub(static_cast<Eigen::Index>(rows.size()), coefficients_.cols());
  std::vector<std::size_t> leads;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    sub.row(static_cast<Eigen::Index>(k)) = coefficients_.row(static_cast<Eigen::Index>(rows[k]));
    leads.push_back(leads_.at(rows[k]));
  }
  return DualBasis(columns_, std::move(sub), std::move(leads), degree_, tol_, reduced_);
}

DualBasis reduce_lead_terms(const Eigen::MatrixXcd& rows, MonomialIndexPtr columns, int degree, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const Eigen::Index k = rows.rows();
  const Eigen::Index n = rows.cols();
  if (static_cast<std::size_t>(n) != columns->size()) throw std::invalid_argument("row width does not match columns");
  if (k == 0) return DualBasis::empty(std::move(columns), degree, tol);
  if (k > n) throw RankDecisionError("more basis vectors than coordinates");
  require_finite(rows);

  const Qr qr(rows.transpose());
  const Eigen::VectorXd rdiag = qr.r_diagonal();
  if (rdiag.minCoeff() <= tol * rdiag.maxCoeff()) throw RankDecisionError("basis vectors are linearly dependent");
  Eigen::MatrixXcd w = qr.q(k).transpose();

  std::vector<std::size_t> pivots;
  Eigen::Index p = 0;
  Eigen::VectorXcd essential;
  Eigen::VectorXcd workspace(n);
  for (Eigen::Index j = 0; j < n && p < k; ++j) {
    auto col = w.block(p, j, k - p, 1);
    if (col.norm() <= tol) {
      col.setZero();
      continue;
    }
    Complex tau;
    double beta;
    Eigen::VectorXcd v = col;
    essential.resize(k - p - 1);
    v.makeHouseholder(essential, tau, beta);
    w.block(p, j, k - p, n - j).applyHouseholderOnTheLeft(essential, tau, workspace.data());
    w(p, j) = beta;
    w.block(p + 1, j, k - p - 1, 1).setZero();
    pivots.push_back(static_cast<std::size_t>(j));
    ++p;
  }
  if (p < k)
    throw RankDecisionError("lead-term reduction lost " + std::to_string(k - p) +
                            " basis vector(s); tolerance too large for this subspace");

  for (Eigen::Index i = k - 1; i >= 0; --i) {
    const auto pc = static_cast<Eigen::Index>(pivots[i]);
    w.row(i) /= w(i, pc);
    w(i, pc) = 1.0;
    for (Eigen::Index l = 0; l < i; ++l) {
      const Complex f = w(l, pc);
      if (f == Complex{}) continue;
      w.row(l) -= f * w.row(i);
      w(l, pc) = 0.0;
    }
  }
  return DualBasis(std::move(columns), std::move(w), std::move(pivots), degree, tol, true);
}

DualBasis reduce_lead_terms(const DualBasis& basis, double tol) {
  return reduce_lead_terms(basis.coefficients(), basis.column_index(), basis.degree(), tol);
}

Eigen::MatrixXcd embed_rows(const DualBasis& basis, const MonomialIndex& target) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(basis.size()),
                                                static_cast<Eigen::Index>(target.size()));
  const MonomialIndex& src = basis.columns();
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto col = target.find(src[j]);
    if (!col) {
      if (basis.coefficients().col(static_cast<Eigen::Index>(j)).cwiseAbs().maxCoeff() != 0.0)
        throw std::invalid_argument("target columns miss a monomial used by the basis");
      continue;
    }
    out.col(static_cast<Eigen::Index>(*col)) = basis.coefficients().col(static_cast<Eigen::Index>(j));
  }
  return out;
}

}  // namespace nh
