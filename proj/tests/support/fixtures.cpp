#include "fixtures.hpp"

#include <random>

#include "numhilbert/parse.hpp"

namespace nh::testing {

std::vector<Polynomial<Complex>> ExactSystem::complex_gens() const {
  std::vector<Polynomial<Complex>> out;
  for (const auto& g : gens) out.push_back(to_complex(g));
  return out;
}

std::string ExactSystem::describe() const {
  std::string s = name + " {";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + to_string(gens[i], variables);
  return s + "}";
}

ExactSystem make_system(std::string name, std::vector<std::string> vars, const std::vector<std::string>& gens,
                        Tiebreak tiebreak) {
  ExactSystem s{std::move(name), std::move(vars), {}};
  const LocalOrder order(s.variables.size(), tiebreak);
  for (const auto& g : gens) s.gens.push_back(parse_polynomial<Rational>(g, s.variables, order));
  return s;
}

std::vector<ExactSystem> regression_systems() {
  return {
      make_system("mac-example", {"x", "y"}, {"x - y^3", "x^2"}),
      make_system("main-ex1", {"x", "y"}, {"x^2 - x*y^3", "x^4"}),
      make_system("figure2", {"x", "y"}, {"x^2 - y^2", "y^3"}),
      make_system("single-x", {"x"}, {"x"}),
      make_system("coordinate-axes", {"x", "y"}, {"x", "y"}),
      make_system("cusp", {"x", "y"}, {"x^2 - y^3"}),
      make_system("node-tangent", {"x", "y"}, {"x*y", "x^2 + y^3"}),
      make_system("space-curve", {"x", "y", "z"}, {"x*y - z^2", "x^2 - y*z"}),
      make_system("embedded-1d", {"x", "y"}, {"x^2", "x*y"}),
      make_system("triple", {"x", "y", "z"}, {"x^2", "y^2", "z^2 - x*y"}),
  };
}

ExactSystem cyclic4_at_embedded_point() {
  ExactSystem s = make_system("cyclic4", {"x1", "x2", "x3", "x4"},
                              std::vector<std::string>(std::begin(kCyclic4), std::end(kCyclic4)));
  const std::vector<Rational> p{Rational(-1), Rational(1), Rational(1), Rational(-1)};
  for (auto& g : s.gens) g = translate_to_origin<Rational>(g, p);
  return s;
}

std::vector<ExactSystem> random_systems(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<ExactSystem> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(uniform(1, 3));
    const int ngens = uniform(1, 3);
    ExactSystem s{"random-" + std::to_string(out.size()), {}, {}};
    s.variables = n == 1 ? std::vector<std::string>{"x"}
                         : n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"};
    const LocalOrder order(n);
    for (int g = 0; g < ngens; ++g) {
      Polynomial<Rational> f(order);
      const int terms = uniform(1, 3);
      for (int t = 0; t < terms; ++t) {
        const int deg = uniform(1, 5);
        std::vector<int> e(n, 0);
        for (int k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
        int c = uniform(-3, 3);
        if (c == 0) c = 1;
        f.add_term(Monomial(e), Rational(c));
      }
      if (!f.is_zero()) s.gens.push_back(std::move(f));
    }
    if (!s.gens.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::set<Monomial> staircase(std::span<const Monomial> corners, std::size_t nvars, int d) {
  std::set<Monomial> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : monomials_of_degree(nvars, k)) {
      bool inside = false;
      for (const auto& c : corners) inside = inside || c.divides(m);
      if (!inside) out.insert(m);
    }
  return out;
}

namespace {

// Rows t^a x^b f^h of total degree d, columns ordered like the dehomogenized index.
template <class S>
CoefficientMatrix<S> homogeneous_array(std::span<const Polynomial<S>> gens, int d) {
  const LocalOrder& order = gens.front().order();
  const std::size_t n = order.nvars();
  auto cols = make_index(order, d);
  std::vector<Polynomial<S>> hom;
  for (const auto& g : gens) hom.push_back(homogenize(g).poly);
  std::vector<std::vector<std::pair<std::size_t, S>>> rows;
  std::vector<RowLabel> labels;
  for (std::size_t k = 0; k < hom.size(); ++k) {
    const int top = gens[k].degree();
    if (top > d) continue;
    for (const auto& mult : monomials_of_degree(n + 1, d - top)) {
      std::vector<std::pair<std::size_t, S>> row;
      const Polynomial<S> product = hom[k] * mult;
      for (const auto& [m, c] : product.terms()) {
        std::vector<int> e(m.exponents().begin() + 1, m.exponents().end());
        row.emplace_back(cols->at(Monomial(e)), c);
      }
      rows.push_back(std::move(row));
      labels.push_back({k, mult});
    }
  }
  DenseMatrix<S> entries(rows.size(), cols->size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, c] : rows[i]) entries(i, j) = c;
  return {std::move(entries), std::move(labels), std::move(cols)};
}

}  // namespace

DualBasis homogenized_slice(std::span<const Polynomial<Complex>> gens, int d, double tol) {
  std::vector<Polynomial<Complex>> unit;
  for (const auto& g : gens) unit.push_back(g * Complex(1.0 / g.coefficient_norm()));
  auto a = homogeneous_array<Complex>(unit, d);
  KernelResult k = numerical_kernel(a, tol);
  return reduce_lead_terms(k.basis.transpose(), a.columns, d, tol);
}

std::set<Monomial> exact_homogenized_slice_leads(std::span<const Polynomial<Rational>> gens, int d) {
  return exact_leads(homogeneous_array<Rational>(gens, d));
}

std::set<Monomial> exact_leads(const CoefficientMatrix<Rational>& m) {
  auto k = oracle::exact_kernel(m);
  std::set<Monomial> out;
  for (std::size_t c : k.lead_columns) out.insert((*m.columns)[c]);
  return out;
}

std::set<Monomial> to_set(const std::vector<Monomial>& v) { return {v.begin(), v.end()}; }

std::string show(const std::set<Monomial>& s, std::size_t nvars) {
  std::vector<Monomial> v(s.begin(), s.end());
  return show(std::span<const Monomial>(v), nvars);
}

std::string show(std::span<const Monomial> s, std::size_t nvars) {
  const auto names = default_variable_names(nvars);
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].to_string(names);
  return out + "}";
}

}  // namespace nh::testing
