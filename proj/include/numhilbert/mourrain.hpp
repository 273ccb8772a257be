#pragma once

#include <optional>
#include <span>
#include <vector>

#include "numhilbert/kernels.hpp"
#include "numhilbert/linalg.hpp"
#include "numhilbert/polynomial.hpp"

namespace nh {

/// plain: truncated duals of the ideal, D^(d) built from D^(d-1).
/// homogeneous: degree-d slices of the dual of the homogenized ideal, stored
/// dehomogenized (d_t^(d-|a|) d^a is kept as d^a); slice d equals the
/// Sylvester dual at d.
enum class MourrainMode { plain, homogeneous };

/// Integration step. `prev` is the basis at degree d-1; `prev2` is the basis
/// at degree d-2 and is only used in homogeneous mode (nullopt when d < 2).
/// Both must be reduced.
DualBasis mourrain_extend(std::span<const Polynomial<Complex>> gens, const DualBasis& prev,
                          const DualBasis* prev2, int d, double tol, MourrainMode mode,
                          kernels::Execution exec = kernels::Execution::parallel);

/// Degree-0 basis: {1} unless a generator has a nonzero constant term.
DualBasis mourrain_base(std::span<const Polynomial<Complex>> gens, double tol);

/// Walks the degrees 0, 1, 2, ... keeping the last two bases.
class MourrainSequence {
 public:
  MourrainSequence(std::span<const Polynomial<Complex>> gens, double tol, MourrainMode mode,
                   kernels::Execution exec = kernels::Execution::parallel);

  int degree() const { return degree_; }
  const DualBasis& current() const { return *current_; }
  const DualBasis& advance();
  const DualBasis& advance_to(int d);

 private:
  std::vector<Polynomial<Complex>> gens_;
  double tol_;
  MourrainMode mode_;
  kernels::Execution exec_;
  int degree_ = 0;
  std::optional<DualBasis> previous_;
  std::optional<DualBasis> current_;
};

/// Basis at degree d, integrating up from degree 0.
DualBasis mourrain_dual(std::span<const Polynomial<Complex>> gens, int d, double tol,
                        MourrainMode mode = MourrainMode::plain);

}  // namespace nh
