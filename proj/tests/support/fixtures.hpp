#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "numhilbert/linalg.hpp"
#include "numhilbert/oracle.hpp"
#include "numhilbert/polynomial.hpp"

namespace nh::testing {

struct ExactSystem {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Polynomial<Rational>> gens;  // centred at the origin

  std::size_t nvars() const { return variables.size(); }
  std::vector<Polynomial<Complex>> complex_gens() const;
  std::string describe() const;
};

ExactSystem make_system(std::string name, std::vector<std::string> vars, const std::vector<std::string>& gens,
                        Tiebreak tiebreak = Tiebreak::lex);

/// Small exact systems with known local structure at the origin.
std::vector<ExactSystem> regression_systems();

/// Seeded random systems: n <= 3 variables, <= 3 generators, term degrees 1..5,
/// small integer coefficients, no constant terms.
std::vector<ExactSystem> random_systems(std::size_t count, std::uint64_t seed);

/// Cyclic-4 moved so that (-1, 1, 1, -1) is the origin.
ExactSystem cyclic4_at_embedded_point();

inline constexpr const char* kCyclic4[] = {
    "x1 + x2 + x3 + x4",
    "x1*x2 + x2*x3 + x3*x4 + x4*x1",
    "x2*x3*x4 + x1*x3*x4 + x1*x2*x4 + x1*x2*x3",
    "x1*x2*x3*x4 - 1",
};

/// Monomials of degree <= d divisible by no corner.
std::set<Monomial> staircase(std::span<const Monomial> corners, std::size_t nvars, int d);

/// Degree-d slice of the dual of the explicitly homogenized ideal, dehomogenized
/// and reduced. Built from the homogeneous array of the homogenized generators.
DualBasis homogenized_slice(std::span<const Polynomial<Complex>> gens, int d, double tol);

/// Exact counterpart: lead monomials of the dehomogenized slice.
std::set<Monomial> exact_homogenized_slice_leads(std::span<const Polynomial<Rational>> gens, int d);

/// Lead monomials of the exact kernel of an exact coefficient matrix.
std::set<Monomial> exact_leads(const CoefficientMatrix<Rational>& m);

std::set<Monomial> to_set(const std::vector<Monomial>& v);
std::string show(const std::set<Monomial>& s, std::size_t nvars);
std::string show(std::span<const Monomial> s, std::size_t nvars);

}  // namespace nh::testing
