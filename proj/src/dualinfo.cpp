#include "numhilbert/dualinfo.hpp"

#include <sstream>

#include "json.hpp"
#include "numhilbert/sbasis.hpp"
#include "numhilbert/sylvester.hpp"

namespace nh {

using nlohmann::ordered_json;

const char* to_string(Strategy s) { return s == Strategy::sylvester ? "sylvester" : "mourrain"; }
const char* to_string(Tiebreak t) { return t == Tiebreak::lex ? "lex" : "grevlex"; }

DualInfoReport dualinfo_run(const SystemSpec& spec, const DualInfoOptions& options) {
  DualInfoReport r;
  r.variables = spec.variables;
  r.point = options.point ? *options.point : spec.point;
  r.tolerance = options.tolerance ? *options.tolerance : spec.tolerance;
  r.order = options.order ? *options.order : spec.order;
  r.strategy = options.strategy;
  if (r.point.size() != spec.variables.size()) throw std::invalid_argument("point has the wrong number of coordinates");

  const LocalOrder order(spec.variables.size(), r.order);
  std::vector<Polynomial<Complex>> gens;
  for (const auto& g : spec.generators) gens.push_back(g.with_order(order));
  gens = localize(gens, r.point, r.tolerance);

  SearchOptions so;
  so.tol = r.tolerance;
  so.strategy = r.strategy;
  so.max_degree = options.max_degree ? options.max_degree : spec.max_degree;
  so.retain_duals = true;
  so.exec = options.exec;
  GCornerSearch search = find_gcorners(gens, so);

  r.records = search.records;
  r.last_degree = search.last_degree;
  r.d_max = search.d_max;
  r.truncated = search.truncated;
  r.sylvester_dimensions = search.dimensions;

  const int e = max_ecart<Complex>(gens);
  DualBasis truncated = embedded_truncated_dual(search.duals.back(), e);
  r.dual_degree = truncated.degree();
  r.dual_basis = truncated.elements(r.tolerance);

  const auto corners = minimal_gcorners(search.records, order);
  r.hilbert = hilbert_data(corners, order.nvars());
  if (options.standard_basis) r.standard_basis = standard_basis(search, true);
  return r;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

ordered_json complex_json(const Complex& c) { return ordered_json::array({c.real(), c.imag()}); }

ordered_json exponents_json(const Monomial& m) {
  ordered_json a = ordered_json::array();
  for (int e : m.exponents()) a.push_back(e);
  return a;
}

template <class Terms>
ordered_json terms_json(const Terms& terms) {
  ordered_json a = ordered_json::array();
  for (const auto& [m, c] : terms) a.push_back({{"exponents", exponents_json(m)}, {"coefficient", complex_json(c)}});
  return a;
}

}  // namespace

std::string format_text(const DualInfoReport& r) {
  std::ostringstream out;
  const auto& names = r.variables;
  out << "dual basis (degree " << r.dual_degree << ", dimension " << r.dual_basis.size() << "):\n";
  for (const auto& p : r.dual_basis) out << "  " << to_string(p, names) << "\n";

  std::vector<std::string> cs;
  for (const auto& c : r.hilbert.gcorners) cs.push_back(c.to_string(names));
  out << "g-corners: {" << join(cs) << "}\n";
  out << "regularity bound: " << r.hilbert.reported_bound << " (tight: " << r.hilbert.tight_bound << ")\n";
  std::vector<std::string> vs;
  for (auto v : r.hilbert.values) vs.push_back(std::to_string(v));
  out << "Hilbert values: {" << join(vs) << "}\n";
  out << "Hilbert polynomial: " << r.hilbert.polynomial.to_string("d") << "\n";
  if (r.hilbert.dimension < 0) out << "dimension: isolated point\n";
  else out << "dimension: " << r.hilbert.dimension << "\n";
  out << "search: degrees 0.." << r.last_degree << ", stopping degree " << r.d_max << ", strategy "
      << to_string(r.strategy) << "\n";
  if (r.truncated) out << "search truncated at degree " << r.last_degree << "\n";
  if (r.standard_basis) {
    out << "standard basis (coordinates centred at the point):\n";
    for (const auto& g : *r.standard_basis) out << "  " << to_string(g, names) << "\n";
  }
  return out.str();
}

std::string format_json(const DualInfoReport& r) {
  ordered_json j;
  j["variables"] = r.variables;
  ordered_json point = ordered_json::array();
  for (const auto& c : r.point) point.push_back(complex_json(c));
  j["point"] = point;
  j["tolerance"] = r.tolerance;
  j["strategy"] = to_string(r.strategy);
  j["order"] = to_string(r.order);

  ordered_json dual = ordered_json::array();
  for (const auto& p : r.dual_basis)
    dual.push_back({{"lead", exponents_json(p.lead_monomial())}, {"text", to_string(p, r.variables)},
                    {"terms", terms_json(p.sorted_terms())}});
  j["dual_basis"] = {{"degree", r.dual_degree}, {"elements", dual}};

  ordered_json corners = ordered_json::array();
  for (const auto& c : r.hilbert.gcorners)
    corners.push_back({{"monomial", c.to_string(r.variables)}, {"exponents", exponents_json(c)}});
  j["g_corners"] = corners;
  j["regularity_bound"] = r.hilbert.reported_bound;
  j["tight_bound"] = r.hilbert.tight_bound;
  j["hilbert_values"] = r.hilbert.values;
  ordered_json coeffs = ordered_json::array();
  for (const auto& q : r.hilbert.polynomial.coefficients()) coeffs.push_back(q.get_str());
  j["hilbert_polynomial_coeffs"] = coeffs;
  j["hilbert_polynomial"] = r.hilbert.polynomial.to_string("d");
  j["dimension"] = r.hilbert.dimension;

  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records)
    records.push_back({{"monomial", rec.corner.to_string(r.variables)}, {"exponents", exponents_json(rec.corner)},
                       {"found_at", rec.found_at}});
  j["search"] = {{"last_degree", r.last_degree},
                 {"stopping_degree", r.d_max},
                 {"truncated", r.truncated},
                 {"sylvester_dimensions", r.sylvester_dimensions},
                 {"records", records}};

  if (r.standard_basis) {
    ordered_json sb = ordered_json::array();
    for (const auto& g : *r.standard_basis)
      sb.push_back({{"text", to_string(g, r.variables)}, {"terms", terms_json(g.sorted_terms())}});
    j["standard_basis"] = sb;
  }
  return j.dump(2) + "\n";
}

}  // namespace nh
