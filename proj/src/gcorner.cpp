#include "numhilbert/gcorner.hpp"

#include <algorithm>

#include "numhilbert/macaulay.hpp"
#include "numhilbert/mourrain.hpp"
#include "numhilbert/sylvester.hpp"

namespace nh {

namespace {

bool covered(const std::vector<GCornerRecord>& records, const Monomial& m, int d) {
  for (const auto& r : records)
    if (r.corner.divides(m) && m.degree() - r.corner.degree() <= d - r.found_at) return true;
  return false;
}

int pairwise_lcm_bound(const std::vector<GCornerRecord>& records) {
  int best = 0;
  for (std::size_t a = 0; a < records.size(); ++a)
    for (std::size_t b = a; b < records.size(); ++b) {
      const auto& ra = records[a];
      const auto& rb = records[b];
      const int t = std::max(ra.found_at - ra.corner.degree(), rb.found_at - rb.corner.degree());
      best = std::max(best, lcm(ra.corner, rb.corner).degree() + t);
    }
  return best;
}

}  // namespace

std::vector<Polynomial<Complex>> localize(std::span<const Polynomial<Complex>> gens, std::span<const Complex> point,
                                          double tol) {
  std::vector<Polynomial<Complex>> out;
  for (const auto& g : gens) {
    Polynomial<Complex> f = translate_to_origin(g, point).cleaned(tol);
    if (f.is_zero()) continue;
    if (f.coefficient(Monomial(f.nvars())) != Complex{}) throw PointNotOnVariety();
    out.push_back(std::move(f));
  }
  if (out.empty()) throw std::invalid_argument("every generator vanishes identically");
  return out;
}

int initial_stopping_degree(std::span<const Polynomial<Complex>> gens) {
  int lead = 0;
  int top = 0;
  for (const auto& g : gens) {
    lead = std::max(lead, g.lead_degree());
    top = std::max(top, g.degree());
  }
  return std::max(2 * lead, top);
}

GCornerSearch find_gcorners(std::span<const Polynomial<Complex>> gens_in, const SearchOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  auto gens = detail::unit_generators(gens_in);
  const LocalOrder& order = detail::common_order<Complex>(gens);
  const double t = options.tol;
  for (const auto& g : gens)
    if (std::abs(g.coefficient(Monomial(order.nvars()))) > t * g.max_coefficient_magnitude())
      throw PointNotOnVariety();

  GCornerSearch out;
  out.d_max = initial_stopping_degree(gens);
  const int initial = out.d_max;
  std::optional<MourrainSequence> seq;
  if (options.strategy == Strategy::mourrain) seq.emplace(gens, t, MourrainMode::homogeneous, options.exec);

  for (int d = 0; d <= out.d_max; ++d) {
    if (options.max_degree && d > *options.max_degree) {
      out.truncated = true;
      break;
    }
    DualBasis sdual = options.strategy == Strategy::mourrain ? (d == 0 ? seq->current() : seq->advance())
                                                             : sylvester_dual(gens, d, t);
    out.last_degree = d;
    out.dimensions.push_back(sdual.size());
    if (d == 0 && sdual.size() == 0) throw PointNotOnVariety();

    const auto leads = sdual.lead_set();
    std::vector<GCornerRecord> found;
    for (const Monomial& m : sdual.columns().monomials())
      if (!leads.contains(m) && !covered(out.records, m, d)) found.push_back({m, d});
    for (const auto& r : found)
      if (r.corner.is_one()) throw PointNotOnVariety();
    out.records.insert(out.records.end(), found.begin(), found.end());

    if (!found.empty()) {
      if (options.lcm_stopping_bound)
        out.d_max = std::max({out.d_max, initial, pairwise_lcm_bound(out.records)});
      else if (2 * d > out.d_max)
        out.d_max = 2 * d;
    }
    if (options.retain_duals) out.duals.push_back(std::move(sdual));
  }
  return out;
}

std::vector<Monomial> minimal_gcorners(std::span<const Monomial> corners, const LocalOrder& order) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < corners.size() && minimal; ++j) {
      if (i == j || !corners[j].divides(corners[i])) continue;
      // Equal monomials: keep the first occurrence only.
      if (corners[j] != corners[i] || j < i) minimal = false;
    }
    if (minimal) out.push_back(corners[i]);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::vector<Monomial> minimal_gcorners(std::span<const GCornerRecord> records, const LocalOrder& order) {
  std::vector<Monomial> corners;
  for (const auto& r : records) corners.push_back(r.corner);
  return minimal_gcorners(corners, order);
}

}  // namespace nh
