#include "numhilbert/sbasis.hpp"

#include <algorithm>

namespace nh {

Polynomial<Complex> recover_sbasis_element(const DualBasis& sdual, const Monomial& c) {
  const MonomialIndex& cols = sdual.columns();
  const auto pos = static_cast<Eigen::Index>(cols.at(c));
  const double tol = sdual.tolerance();

  Eigen::MatrixXcd kernel;
  if (sdual.size() == 0) {
    kernel = Eigen::MatrixXcd::Identity(pos + 1, pos + 1);
  } else {
    kernel = numerical_kernel(Eigen::MatrixXcd(sdual.coefficients().leftCols(pos + 1)), tol).basis;
  }
  const Eigen::RowVectorXcd w = kernel.row(pos);
  const double wn = w.norm();
  if (wn <= tol) throw MissingLeadError("no kernel element with lead " + c.to_string(default_variable_names(c.nvars())));
  const Eigen::VectorXcd g = kernel * w.adjoint() / (wn * wn);

  Polynomial<Complex> out(cols.order());
  for (Eigen::Index j = 0; j <= pos; ++j) out.add_term(cols[static_cast<std::size_t>(j)], g(j));
  out = out.cleaned(tol);
  out.add_term(c, Complex(1.0) - out.coefficient(c));
  return out;
}

std::vector<Polynomial<Complex>> standard_basis(const GCornerSearch& search, bool reduced) {
  if (search.records.empty()) return {};
  if (search.duals.size() != static_cast<std::size_t>(search.last_degree + 1))
    throw std::invalid_argument("standard basis recovery needs the retained duals of every degree");
  std::vector<Polynomial<Complex>> out;
  const LocalOrder& order = search.duals.front().columns().order();
  std::vector<Monomial> keep;
  if (reduced) keep = minimal_gcorners(search.records, order);
  for (const auto& r : search.records) {
    if (reduced && std::find(keep.begin(), keep.end(), r.corner) == keep.end()) continue;
    out.push_back(recover_sbasis_element(search.duals[static_cast<std::size_t>(r.found_at)], r.corner));
  }
  return out;
}

std::vector<Polynomial<Complex>> standard_basis(std::span<const Polynomial<Complex>> gens, SearchOptions options,
                                                bool reduced) {
  options.retain_duals = true;
  return standard_basis(find_gcorners(gens, options), reduced);
}

Membership membership(const Polynomial<Complex>& f, const DualBasis& sdual, double tol) {
  if (f.is_zero()) return Membership::member;
  if (f.degree() > sdual.degree()) return Membership::out_of_range;
  const double fn = f.coefficient_norm();
  for (std::size_t i = 0; i < sdual.size(); ++i) {
    const double pn = sdual.coefficients().row(static_cast<Eigen::Index>(i)).norm();
    if (std::abs(sdual.apply(i, f)) > tol * pn * fn) return Membership::non_member;
  }
  return Membership::member;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::member:
      return "member";
    case Membership::non_member:
      return "non-member";
    case Membership::out_of_range:
      return "out-of-range";
  }
  return "?";
}

}  // namespace nh
