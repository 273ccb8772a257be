#include "numhilbert/macaulay.hpp"
#include "numhilbert/sylvester.hpp"

namespace nh {

namespace detail {

std::vector<Polynomial<Complex>> unit_generators(std::span<const Polynomial<Complex>> gens) {
  std::vector<Polynomial<Complex>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    const double norm = g.coefficient_norm();
    if (norm == 0.0) throw std::invalid_argument("zero generator");
    out.push_back(g * Complex(1.0 / norm));
  }
  return out;
}

}  // namespace detail

namespace {

DualBasis kernel_basis(const CoefficientMatrix<Complex>& array, int d, double tol) {
  KernelResult k = numerical_kernel(array, tol);
  return reduce_lead_terms(k.basis.transpose(), array.columns, d, tol);
}

}  // namespace

DualBasis truncated_dual(std::span<const Polynomial<Complex>> gens, int d, double tol) {
  auto unit = detail::unit_generators(gens);
  return kernel_basis(macaulay_array<Complex>(unit, d), d, tol);
}

DualBasis sylvester_dual(std::span<const Polynomial<Complex>> gens, int d, double tol) {
  auto unit = detail::unit_generators(gens);
  return kernel_basis(sylvester_array<Complex>(unit, d), d, tol);
}

DualBasis embedded_truncated_dual(const DualBasis& sdual, int max_ecart) {
  if (!sdual.reduced()) throw std::invalid_argument("embedded truncated dual needs a reduced basis");
  const int limit = sdual.degree() - max_ecart;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < sdual.size(); ++i)
    if (sdual.columns()[sdual.lead_columns()[i]].degree() <= limit) keep.push_back(i);
  DualBasis sub = sdual.select(keep);
  // Re-label the degree: these elements describe the truncated dual at d - e.
  return DualBasis(sub.column_index(), sub.coefficients(), sub.lead_columns(), std::max(limit, -1),
                   sub.tolerance(), true);
}

}  // namespace nh
