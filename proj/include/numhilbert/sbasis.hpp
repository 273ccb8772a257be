#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "numhilbert/gcorner.hpp"
#include "numhilbert/linalg.hpp"
#include "numhilbert/polynomial.hpp"

namespace nh {

/// No polynomial annihilated by the Sylvester dual has the requested lead:
/// the corner record and the tolerance disagree.
class MissingLeadError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Polynomial with lead c and unit lead coefficient annihilated by `sdual`,
/// supported on the monomials m <= c of degree <= d. Among all such, the one
/// of least coefficient 2-norm.
Polynomial<Complex> recover_sbasis_element(const DualBasis& sdual, const Monomial& c);

/// One element per record, using the retained duals of the search.
std::vector<Polynomial<Complex>> standard_basis(const GCornerSearch& search, bool reduced = false);

/// Runs the search (retaining duals) and recovers a standard basis.
std::vector<Polynomial<Complex>> standard_basis(std::span<const Polynomial<Complex>> gens, SearchOptions options,
                                                bool reduced = false);

enum class Membership { member, non_member, out_of_range };

/// Bounded-degree membership against the Sylvester dual at degree d.
Membership membership(const Polynomial<Complex>& f, const DualBasis& sdual, double tol);

const char* to_string(Membership m);

}  // namespace nh
