#pragma once

// Exact-rational reference computations. Small instances only.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "numhilbert/matrix.hpp"
#include "numhilbert/polynomial.hpp"

namespace nh::oracle {

using QPoly = Polynomial<Rational>;

/// (l / in f) f - (l / in g) g with l = lcm(in f, in g); lead coefficients are divided out.
QPoly spair(const QPoly& f, const QPoly& g);

struct NormalForm {
  QPoly remainder;               ///< u f - sum a_i g_i
  QPoly unit;                    ///< u, with u(0) != 0
  std::vector<QPoly> cofactors;  ///< a_i, one per element of G
};

/// Violated normal-form contract (a bug, never an input problem).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Mora's tangent-cone reduction. The divisor is chosen by smallest ecart, ties
/// by greatest lead; intermediate remainders join the reducer set when their
/// ecart is smaller than the chosen divisor's. The result is checked against
/// the normal-form contract on every call.
NormalForm mora_normal_form(const QPoly& f, std::span<const QPoly> G);

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
  int degree_cap = 40;          ///< max term degree of any adjoined element
  std::size_t max_elements = 200;
  bool reduced = true;          ///< keep only elements with divisibility-minimal leads, monic
};

/// Standard basis under the local order of the inputs.
std::vector<QPoly> local_buchberger(std::span<const QPoly> F, const BuchbergerOptions& options = {});

/// Lead monomials of `basis` that are minimal under divisibility, sorted descending.
std::vector<Monomial> minimal_leads(std::span<const QPoly> basis);

/// Kernel in reduced echelon form: each row has a distinct lead column (its
/// leftmost nonzero) with entry 1, and every other row is zero there.
struct ExactKernel {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> lead_columns;
  std::size_t dimension() const { return rows.size(); }
};

/// Fraction-free elimination on the integer-scaled rows, then exact back-substitution.
ExactKernel exact_kernel(const DenseMatrix<Rational>& m);
ExactKernel exact_kernel(const CoefficientMatrix<Rational>& m);

/// Rank by the same elimination.
std::size_t exact_rank(const DenseMatrix<Rational>& m);

/// Counts the degree-d monomials divisible by no corner; refuses more than
/// `budget` monomials.
std::int64_t brute_hilbert(std::span<const Monomial> gcorners, std::size_t nvars, int d,
                           std::int64_t budget = 50'000'000);

}  // namespace nh::oracle
