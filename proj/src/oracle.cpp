#include "numhilbert/oracle.hpp"

#include <algorithm>
#include <deque>

namespace nh::oracle {

namespace {

struct Tracked {
  QPoly p;
  QPoly u;
  std::vector<QPoly> c;
};

void subtract_multiple(Tracked& h, const Tracked& g, const Monomial& m, const Rational& s) {
  h.p -= (g.p * m) * s;
  if (!g.u.is_zero()) h.u -= (g.u * m) * s;
  for (std::size_t i = 0; i < h.c.size(); ++i)
    if (!g.c[i].is_zero()) h.c[i] -= (g.c[i] * m) * s;
}

void check_normal_form(const QPoly& f, std::span<const QPoly> G, const NormalForm& nf) {
  const LocalOrder& order = f.order();
  if (sgn(nf.unit.coefficient(Monomial(f.nvars()))) == 0) throw ContractError("normal form unit vanishes at 0");
  QPoly rebuilt = nf.unit * f;
  for (std::size_t i = 0; i < G.size(); ++i) rebuilt -= nf.cofactors[i] * G[i];
  if (!(rebuilt == nf.remainder)) throw ContractError("normal form identity u f - sum a_i g_i fails");
  if (f.is_zero()) return;
  if (!nf.remainder.is_zero()) {
    if (order.greater(nf.remainder.lead_monomial(), f.lead_monomial()))
      throw ContractError("normal form lead exceeds the input lead");
    for (const auto& g : G)
      if (!g.is_zero() && g.lead_monomial().divides(nf.remainder.lead_monomial()))
        throw ContractError("normal form lead is still reducible");
  }
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (nf.cofactors[i].is_zero()) continue;
    QPoly term = nf.cofactors[i] * G[i];
    if (!term.is_zero() && order.greater(term.lead_monomial(), f.lead_monomial()))
      throw ContractError("cofactor term exceeds the input lead");
  }
}

std::vector<std::vector<mpz_class>> integer_rows(const DenseMatrix<Rational>& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows, std::vector<mpz_class>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols; ++j) {
      mpq_class v = m(i, j) * scale;
      rows[i][j] = v.get_num();
    }
  }
  return rows;
}

// Bareiss elimination in place; returns the pivot columns of the echelon rows.
std::vector<std::size_t> bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t())) throw ContractError("Bareiss division not exact");
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void reduced_echelon(std::vector<std::vector<Rational>>& rows, std::vector<std::size_t>& leads, std::size_t cols) {
  leads.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    leads.push_back(c);
    ++r;
  }
  rows.resize(r);
}

}  // namespace

QPoly spair(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-pair of a zero polynomial");
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  QPoly a = (f * (l / f.lead_monomial())) * Rational(1 / f.lead_coefficient());
  QPoly b = (g * (l / g.lead_monomial())) * Rational(1 / g.lead_coefficient());
  return a - b;
}

NormalForm mora_normal_form(const QPoly& f, std::span<const QPoly> G) {
  const LocalOrder& order = f.order();
  const std::size_t k = G.size();
  Tracked h{f, QPoly::constant(order, Rational(1)), std::vector<QPoly>(k, QPoly(order))};
  std::vector<Tracked> reducers;
  for (std::size_t i = 0; i < k; ++i) {
    if (G[i].order() != order) throw std::invalid_argument("normal form over mixed orders");
    if (G[i].is_zero()) continue;
    Tracked t{G[i], QPoly(order), std::vector<QPoly>(k, QPoly(order))};
    t.c[i] = QPoly::constant(order, Rational(1));
    reducers.push_back(std::move(t));
  }

  for (std::size_t steps = 0; !h.p.is_zero(); ++steps) {
    if (steps > 200000) throw ContractError("Mora reduction did not terminate");
    const Monomial& lm = h.p.lead_monomial();
    const Tracked* best = nullptr;
    for (const auto& t : reducers) {
      if (!t.p.lead_monomial().divides(lm)) continue;
      if (!best || t.p.ecart() < best->p.ecart() ||
          (t.p.ecart() == best->p.ecart() && order.greater(t.p.lead_monomial(), best->p.lead_monomial())))
        best = &t;
    }
    if (!best) break;
    Tracked g = *best;
    if (g.p.ecart() > h.p.ecart()) reducers.push_back(h);
    subtract_multiple(h, g, lm / g.p.lead_monomial(), h.p.lead_coefficient() / g.p.lead_coefficient());
  }

  NormalForm nf{h.p, h.u, {}};
  for (auto& c : h.c) nf.cofactors.push_back(-c);
  check_normal_form(f, G, nf);
  return nf;
}

std::vector<Monomial> minimal_leads(std::span<const QPoly> basis) {
  std::vector<Monomial> leads;
  for (const auto& g : basis)
    if (!g.is_zero()) leads.push_back(g.lead_monomial());
  if (leads.empty()) return {};
  const LocalOrder& order = basis.front().order();
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < leads.size() && minimal; ++j)
      if (i != j && leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i)) minimal = false;
    if (minimal) out.push_back(leads[i]);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::vector<QPoly> local_buchberger(std::span<const QPoly> F, const BuchbergerOptions& options) {
  std::vector<QPoly> G;
  for (const auto& f : F)
    if (!f.is_zero()) G.push_back(f.normalized());
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    // Smallest lcm degree first.
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return lcm(G[a.first].lead_monomial(), G[a.second].lead_monomial()).degree() <
             lcm(G[b.first].lead_monomial(), G[b.second].lead_monomial()).degree();
    });
    const auto [i, j] = *it;
    pairs.erase(it);
    QPoly h = mora_normal_form(spair(G[i], G[j]), G).remainder;
    if (h.is_zero()) continue;
    if (h.degree() > options.degree_cap)
      throw DegreeCapExceeded("standard basis element exceeds degree cap " + std::to_string(options.degree_cap));
    if (G.size() >= options.max_elements)
      throw DegreeCapExceeded("standard basis exceeds " + std::to_string(options.max_elements) + " elements");
    G.push_back(h.normalized());
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }

  if (!options.reduced) return G;
  std::vector<QPoly> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < G.size() && minimal; ++j)
      if (i != j && G[j].lead_monomial().divides(G[i].lead_monomial()) &&
          (G[j].lead_monomial() != G[i].lead_monomial() || j < i))
        minimal = false;
    if (minimal) out.push_back(G[i]);
  }
  return out;
}

ExactKernel exact_kernel(const DenseMatrix<Rational>& m) {
  const std::size_t n = m.cols;
  auto a = integer_rows(m);
  const auto pivots = bareiss(a, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  ExactKernel out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = pivots.size(); i-- > 0;) {
      const std::size_t pc = pivots[i];
      Rational acc(0);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (sgn(v[j]) != 0 && sgn(a[i][j]) != 0) acc += Rational(a[i][j]) * v[j];
      v[pc] = -acc / Rational(a[i][pc]);
    }
    out.rows.push_back(std::move(v));
  }
  reduced_echelon(out.rows, out.lead_columns, n);
  return out;
}

ExactKernel exact_kernel(const CoefficientMatrix<Rational>& m) { return exact_kernel(m.entries); }

std::size_t exact_rank(const DenseMatrix<Rational>& m) {
  auto a = integer_rows(m);
  return bareiss(a, m.cols).size();
}

std::int64_t brute_hilbert(std::span<const Monomial> gcorners, std::size_t nvars, int d, std::int64_t budget) {
  if (d < 0) throw std::invalid_argument("negative degree");
  // C(d + n - 1, n - 1), checked before enumerating.
  __int128 count = 1;
  for (std::size_t k = 1; k < nvars; ++k) {
    count = count * (d + static_cast<std::int64_t>(k)) / static_cast<std::int64_t>(k);
    if (count > budget) throw std::length_error("brute-force Hilbert count exceeds its budget");
  }
  std::int64_t h = 0;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool outside = true;
    for (const auto& c : gcorners)
      if (c.divides(m)) {
        outside = false;
        break;
      }
    if (outside) ++h;
  }
  return h;
}

}  // namespace nh::oracle
