#include "numhilbert/mourrain.hpp"

#include <cstdint>

#include "numhilbert/macaulay.hpp"

namespace nh {

namespace {

// Variables the integrals run over. Plain mode: x_1..x_n. Homogeneous mode:
// t, x_1..x_n, with monomials stored dehomogenized so t never appears.
struct Frame {
  MourrainMode mode;
  std::size_t n;

  std::size_t vars() const { return mode == MourrainMode::plain ? n : n + 1; }

  // Integral of the dual monomial m by frame variable v after setting the
  // later variables to zero.
  std::optional<Monomial> integrate(const Monomial& m, std::size_t v) const {
    if (mode == MourrainMode::homogeneous) {
      if (v == 0) return m.is_one() ? std::optional<Monomial>(m) : std::nullopt;
      --v;
    }
    for (std::size_t k = v + 1; k < n; ++k)
      if (m[k] != 0) return std::nullopt;
    return m.shifted(v, 1);
  }

  // d_v of the dual monomial m taken from the basis at degree `slice`.
  std::optional<Monomial> derive(const Monomial& m, std::size_t v, int slice) const {
    if (mode == MourrainMode::homogeneous) {
      if (v == 0) return m.degree() == slice ? std::nullopt : std::optional<Monomial>(m);
      --v;
    }
    if (m[v] == 0) return std::nullopt;
    return m.shifted(v, -1);
  }
};

Eigen::VectorXcd coefficient_vector(const Polynomial<Complex>& f, const MonomialIndex& cols) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cols.size()));
  for (const auto& [m, c] : f.terms())
    if (auto j = cols.find(m)) out(static_cast<Eigen::Index>(*j)) = c;
  return out;
}

Eigen::MatrixXcd integration_rows(const Frame& fr, const DualBasis& prev, const MonomialIndex& cols,
                                  kernels::Execution exec) {
  const auto r = static_cast<std::int64_t>(prev.size());
  const auto total = static_cast<std::int64_t>(fr.vars()) * r;
  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(total, static_cast<Eigen::Index>(cols.size()));
  const Eigen::MatrixXcd& b = prev.coefficients();
  const MonomialIndex& src = prev.columns();
  auto fill = [&](std::int64_t row) {
    const auto v = static_cast<std::size_t>(row / r);
    const auto j = row % r;
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      if (b(j, c) == Complex{}) continue;
      if (auto t = fr.integrate(src[static_cast<std::size_t>(c)], v))
        phi(row, static_cast<Eigen::Index>(cols.at(*t))) += b(j, c);
    }
  };
  if (exec == kernels::Execution::serial) {
    for (std::int64_t row = 0; row < total; ++row) fill(row);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t row = 0; row < total; ++row) fill(row);
  }
  return phi;
}

// mu[v](j, k): coordinate of d_v(beta_j) on gamma_k, read at gamma's lead columns.
std::vector<Eigen::MatrixXcd> derivative_coordinates(const Frame& fr, const DualBasis& prev, const DualBasis& gamma) {
  const auto r = static_cast<Eigen::Index>(prev.size());
  const auto g = static_cast<Eigen::Index>(gamma.size());
  const Eigen::MatrixXcd& b = prev.coefficients();
  const MonomialIndex& src = prev.columns();
  std::vector<Eigen::MatrixXcd> mu(fr.vars(), Eigen::MatrixXcd::Zero(r, g));
  Eigen::VectorXcd dv(static_cast<Eigen::Index>(gamma.columns().size()));
  for (std::size_t v = 0; v < fr.vars(); ++v) {
    for (Eigen::Index j = 0; j < r; ++j) {
      dv.setZero();
      for (Eigen::Index c = 0; c < b.cols(); ++c) {
        if (b(j, c) == Complex{}) continue;
        auto dm = fr.derive(src[static_cast<std::size_t>(c)], v, prev.degree());
        if (!dm) continue;
        if (auto gc = gamma.columns().find(*dm)) dv(static_cast<Eigen::Index>(*gc)) += b(j, c);
      }
      for (Eigen::Index k = 0; k < g; ++k) mu[v](j, k) = dv(static_cast<Eigen::Index>(gamma.lead_columns()[k]));
    }
  }
  return mu;
}

}  // namespace

DualBasis mourrain_base(std::span<const Polynomial<Complex>> gens, double tol) {
  const LocalOrder& order = detail::common_order(gens);
  auto cols = make_index(order, 0);
  for (const auto& f : gens) {
    const Complex c0 = f.coefficient(Monomial(order.nvars()));
    if (std::abs(c0) > tol * f.max_coefficient_magnitude()) return DualBasis::empty(cols, 0, tol);
  }
  return DualBasis(cols, Eigen::MatrixXcd::Ones(1, 1), {0}, 0, tol, true);
}

DualBasis mourrain_extend(std::span<const Polynomial<Complex>> gens_in, const DualBasis& prev,
                          const DualBasis* prev2, int d, double tol, MourrainMode mode, kernels::Execution exec) {
  if (d < 1) throw std::invalid_argument("integration step needs d >= 1");
  if (prev.degree() != d - 1 || !prev.reduced()) throw std::invalid_argument("previous basis must be reduced at degree d-1");
  if (prev2 && (prev2->degree() != d - 2 || !prev2->reduced()))
    throw std::invalid_argument("second basis must be reduced at degree d-2");
  auto gens = detail::unit_generators(gens_in);
  const LocalOrder& order = detail::common_order<Complex>(gens);
  const Frame fr{mode, order.nvars()};
  auto cols = make_index(order, d);
  if (prev.size() == 0) return DualBasis::empty(cols, d, tol);

  Eigen::MatrixXcd phi = integration_rows(fr, prev, *cols, exec);

  const DualBasis* gamma = mode == MourrainMode::plain ? &prev : prev2;
  Eigen::MatrixXcd comm(0, phi.rows());
  if (gamma && gamma->size() > 0 && fr.vars() > 1) comm = kernels::commutation_rows(derivative_coordinates(fr, prev, *gamma), exec);

  std::vector<Eigen::VectorXcd> gen_rows;
  for (const auto& f : gens) {
    if (mode == MourrainMode::homogeneous && f.degree() != d) continue;
    gen_rows.push_back(phi * coefficient_vector(f, *cols));
  }

  Eigen::MatrixXcd constraints(comm.rows() + static_cast<Eigen::Index>(gen_rows.size()), phi.rows());
  constraints.topRows(comm.rows()) = comm;
  for (std::size_t k = 0; k < gen_rows.size(); ++k)
    constraints.row(comm.rows() + static_cast<Eigen::Index>(k)) = gen_rows[k].transpose();

  Eigen::MatrixXcd lambda = numerical_kernel(constraints, tol).basis;
  Eigen::MatrixXcd images = phi.transpose() * lambda;
  Eigen::MatrixXcd span = column_span(images, tol);
  if (mode == MourrainMode::plain) {
    span.conservativeResize(Eigen::NoChange, span.cols() + 1);
    span.col(span.cols() - 1).setZero();
    span(static_cast<Eigen::Index>(cols->at(Monomial(order.nvars()))), span.cols() - 1) = 1.0;
  }
  return reduce_lead_terms(span.transpose(), cols, d, tol);
}

MourrainSequence::MourrainSequence(std::span<const Polynomial<Complex>> gens, double tol, MourrainMode mode,
                                   kernels::Execution exec)
    : gens_(detail::unit_generators(gens)), tol_(tol), mode_(mode), exec_(exec) {
  current_.emplace(mourrain_base(gens_, tol_));
}

const DualBasis& MourrainSequence::advance() {
  DualBasis next = mourrain_extend(gens_, *current_, previous_ ? &*previous_ : nullptr, degree_ + 1, tol_, mode_, exec_);
  previous_ = std::move(current_);
  current_.emplace(std::move(next));
  ++degree_;
  return *current_;
}

const DualBasis& MourrainSequence::advance_to(int d) {
  if (d < degree_) throw std::invalid_argument("sequence cannot go back in degree");
  while (degree_ < d) advance();
  return *current_;
}

DualBasis mourrain_dual(std::span<const Polynomial<Complex>> gens, int d, double tol, MourrainMode mode) {
  if (d < 0) throw std::invalid_argument("negative degree");
  MourrainSequence seq(gens, tol, mode);
  return seq.advance_to(d);
}

}  // namespace nh
