#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "numhilbert/kernels.hpp"
#include "numhilbert/linalg.hpp"
#include "numhilbert/polynomial.hpp"

namespace nh {

/// 1 lies in the ideal within tolerance: the point is not a zero of the system.
class PointNotOnVariety : public std::runtime_error {
 public:
  PointNotOnVariety() : std::runtime_error("point not on variety within tolerance") {}
};

/// How the Sylvester dual is computed at each degree.
enum class Strategy {
  sylvester,  ///< kernel of the Sylvester array
  mourrain,   ///< integration over the homogenized ideal
};

/// A g-corner of the homogenized ideal, dehomogenized: `found_at` is its total
/// degree including the power of t.
struct GCornerRecord {
  Monomial corner;
  int found_at = 0;
  bool operator==(const GCornerRecord&) const = default;
};

struct SearchOptions {
  double tol = 1e-4;
  Strategy strategy = Strategy::mourrain;
  /// Hard cap on the degree; the result is marked truncated when d_max exceeds it.
  std::optional<int> max_degree;
  /// Stop at the largest degree of an lcm of two homogenized corners instead of doubling.
  bool lcm_stopping_bound = false;
  /// Keep the reduced Sylvester dual of every degree.
  bool retain_duals = false;
  kernels::Execution exec = kernels::Execution::parallel;
};

struct GCornerSearch {
  std::vector<GCornerRecord> records;
  int last_degree = -1;                 ///< highest degree examined
  int d_max = 0;                        ///< final value of the stopping degree
  bool truncated = false;               ///< stopped by max_degree before d_max
  std::vector<std::size_t> dimensions;  ///< dim of the Sylvester dual per degree
  std::vector<DualBasis> duals;         ///< per degree, when retained
};

/// Translate to the origin, drop coefficients <= tol * max |coefficient|.
/// Throws PointNotOnVariety if a constant term survives.
std::vector<Polynomial<Complex>> localize(std::span<const Polynomial<Complex>> gens, std::span<const Complex> point,
                                          double tol);

/// Degree-by-degree search over the Sylvester dual. Generators must already be
/// centred at the point of interest.
GCornerSearch find_gcorners(std::span<const Polynomial<Complex>> gens, const SearchOptions& options = {});

/// Divisibility-minimal corners, sorted descending under the order.
std::vector<Monomial> minimal_gcorners(std::span<const GCornerRecord> records, const LocalOrder& order);
std::vector<Monomial> minimal_gcorners(std::span<const Monomial> corners, const LocalOrder& order);

/// Initial stopping degree: max(2 * max lead degree, max total degree).
int initial_stopping_degree(std::span<const Polynomial<Complex>> gens);

}  // namespace nh
