// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "numhilbert/dualinfo.hpp"
#include "numhilbert/gcorner.hpp"
#include "numhilbert/hilbert.hpp"
#include "numhilbert/macaulay.hpp"
#include "numhilbert/mourrain.hpp"
#include "numhilbert/oracle.hpp"
#include "numhilbert/parse.hpp"
#include "numhilbert/sbasis.hpp"
#include "numhilbert/sylvester.hpp"

using namespace nh;
using nh::testing::ExactSystem;

namespace {

struct Check {
  std::ostringstream log;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    failed: " << what << "\n";
    }
  }
};

using Criterion = std::function<void(Check&)>;

const std::vector<std::string> kXY{"x", "y"};

std::vector<Polynomial<Complex>> gens_xy(std::initializer_list<const char*> text) {
  std::vector<Polynomial<Complex>> out;
  for (const char* t : text) out.push_back(parse_polynomial<Complex>(t, kXY, LocalOrder(2)));
  return out;
}

Monomial xy(int a, int b) { return Monomial{a, b}; }

std::set<Monomial> leads(const DualBasis& b) { return b.lead_set(); }

// Coefficientwise distance after scaling both to a unit lead coefficient.
double poly_distance(const Polynomial<Complex>& a, const Polynomial<Complex>& b) {
  auto d = a.normalized() - b.normalized();
  return d.max_coefficient_magnitude();
}

const char* kCyclic4Spec = R"(vars: x1, x2, x3, x4
point: -1.0-.53734e-17*ii, 1.0-.20045e-16*ii, 1.0+.89149e-17*ii, -1.0+.18026e-17*ii
tolerance: 1e-4
gens:
  x1 + x2 + x3 + x4
  x1*x2 + x2*x3 + x3*x4 + x4*x1
  x2*x3*x4 + x1*x3*x4 + x1*x2*x4 + x1*x2*x3
  x1*x2*x3*x4 - 1
)";

const char* kCurveSpec = R"(vars: x1, x2, x3
point: 0.7071068, 0.7071068, 0
tolerance: 1e-4
gens:
  (x1^2 + x2^2 + x3^2 - 1)*(x1 - x2)
  (x1 - x2)^3
)";

void check_cyclic4_report(Check& c, const DualInfoReport& r, const std::string& tag) {
  const std::vector<Monomial> want{Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0}, Monomial{0, 0, 2, 0},
                                   Monomial{0, 0, 1, 1}};
  c.expect(testing::to_set(r.hilbert.gcorners) == testing::to_set(want),
           tag + "g-corners " + testing::show(r.hilbert.gcorners, 4));
  c.expect(r.hilbert.reported_bound == 5, tag + "bound " + std::to_string(r.hilbert.reported_bound));
  c.expect(r.hilbert.values == std::vector<std::int64_t>{1, 2, 1, 1, 1}, tag + "values");
  c.expect(r.hilbert.polynomial.coefficients() == std::vector<Rational>{Rational(1)},
           tag + "polynomial " + r.hilbert.polynomial.to_string());
  c.expect(r.hilbert.dimension == 1, tag + "dimension " + std::to_string(r.hilbert.dimension));
}

// Criterion 7/8 population: the seeded random systems that the exact oracle can handle.
struct Suite {
  std::vector<ExactSystem> systems;
  std::vector<std::vector<Monomial>> oracle_corners;
  std::size_t skipped = 0;
};

const Suite& random_suite() {
  static const Suite suite = [] {
    Suite s;
    for (auto& sys : testing::random_systems(40, 20240611)) {
      if (s.systems.size() == 24) break;
      try {
        oracle::BuchbergerOptions opts;
        opts.degree_cap = 24;
        opts.max_elements = 60;
        auto sb = oracle::local_buchberger(sys.gens, opts);
        s.oracle_corners.push_back(oracle::minimal_leads(sb));
        s.systems.push_back(std::move(sys));
      } catch (const oracle::DegreeCapExceeded&) {
        ++s.skipped;
      }
    }
    return s;
  }();
  return suite;
}

void criterion1(Check& c) {
  auto F = gens_xy({"x - y^3", "x^2"});
  DualBasis b = truncated_dual(F, 3, 1e-8);
  c.expect(b.size() == 4, "dimension " + std::to_string(b.size()));
  const std::set<Monomial> want{xy(0, 0), xy(0, 1), xy(0, 2), xy(0, 3)};
  c.expect(leads(b) == want, "lead set " + testing::show(leads(b), 2));
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto p = b.element(i).normalized();
    if (p.lead_monomial() != xy(0, 3)) continue;
    c.expect(std::abs(p.coefficient(xy(1, 0)) - 1.0) <= 1e-6, "d_x coefficient of the d_y^3 element");
  }
}

void criterion2(Check& c) {
  auto F = gens_xy({"x - y^3", "x^2"});
  DualBasis b = sylvester_dual(F, 3, 1e-8);
  c.expect(b.size() == 6, "dimension " + std::to_string(b.size()));
  const std::set<Monomial> want{xy(0, 0), xy(0, 1), xy(1, 1), xy(0, 2), xy(1, 2), xy(0, 3)};
  c.expect(leads(b) == want, "lead set " + testing::show(leads(b), 2));
}

void criterion3(Check& c) {
  auto F = gens_xy({"x^2 - x*y^3", "x^4"});
  const std::vector<GCornerRecord> want{{xy(2, 0), 4}, {xy(4, 0), 4}, {xy(3, 3), 6}, {xy(2, 6), 8}, {xy(1, 9), 10}};
  for (Strategy s : {Strategy::mourrain, Strategy::sylvester}) {
    const std::string tag = std::string(to_string(s)) + ": ";
    SearchOptions opts;
    opts.strategy = s;
    opts.retain_duals = true;
    GCornerSearch search = find_gcorners(F, opts);
    auto got = search.records;
    auto cmp = [](const GCornerRecord& a, const GCornerRecord& b) {
      return std::tie(a.found_at, a.corner) < std::tie(b.found_at, b.corner);
    };
    auto sorted_want = want;
    std::sort(got.begin(), got.end(), cmp);
    std::sort(sorted_want.begin(), sorted_want.end(), cmp);
    c.expect(got == sorted_want, tag + "records");
    c.expect(search.last_degree == 20 && search.dimensions.size() == 21 && !search.truncated,
             tag + "search ended at degree " + std::to_string(search.last_degree));
    auto minimal = minimal_gcorners(search.records, LocalOrder(2));
    c.expect(testing::to_set(minimal) == std::set<Monomial>{xy(2, 0), xy(1, 9)}, tag + "minimal corners");
    auto sb = standard_basis(search, true);
    auto expected = gens_xy({"x^2 - x*y^3", "x*y^9"});
    c.expect(sb.size() == 2, tag + "reduced standard basis size");
    if (sb.size() == 2) {
      for (const auto& e : expected) {
        double best = 1e300;
        for (const auto& g : sb) best = std::min(best, poly_distance(g, e));
        c.expect(best <= 1e-6, tag + "standard basis element " + to_string(e, kXY) + " error " + std::to_string(best));
      }
    }
  }
}

void criterion4(Check& c) {
  const SystemSpec spec = parse_system(kCyclic4Spec);
  check_cyclic4_report(c, dualinfo_run(spec), "");
}

void criterion5(Check& c) {
  const DualInfoReport r = dualinfo_run(parse_system(kCurveSpec));
  c.expect(r.hilbert.reported_bound == 4, "bound " + std::to_string(r.hilbert.reported_bound));
  c.expect(r.hilbert.values == std::vector<std::int64_t>{1, 3, 5, 6}, "values");
  c.expect(r.hilbert.polynomial.coefficients() == std::vector<Rational>{Rational(3), Rational(1)},
           "polynomial " + r.hilbert.polynomial.to_string());
  c.expect(r.hilbert.dimension == 2, "dimension " + std::to_string(r.hilbert.dimension));
}

void criterion6(Check& c) {
  auto F = gens_xy({"x^2 - y^2", "y^3"});
  std::vector<std::size_t> dims;
  for (int d = 0; d <= 8; ++d) dims.push_back(truncated_dual(F, d, 1e-8).size());
  bool stable = true;
  for (int d = 4; d <= 8; ++d) stable = stable && dims[static_cast<std::size_t>(d)] == 6;
  for (int d = 1; d <= 8; ++d) stable = stable && dims[static_cast<std::size_t>(d - 1)] <= dims[static_cast<std::size_t>(d)];
  c.expect(stable, "truncated dual dimensions do not stabilize at 6 by degree 4");
  auto search = find_gcorners(F);
  auto minimal = minimal_gcorners(search.records, LocalOrder(2));
  c.expect(testing::to_set(minimal) == std::set<Monomial>{xy(2, 0), xy(0, 3)}, "g-corners " + testing::show(minimal, 2));
}

void criterion7(Check& c) {
  const Suite& suite = random_suite();
  c.expect(suite.systems.size() >= 20, "only " + std::to_string(suite.systems.size()) + " systems in the suite");
  c.log << "    " << suite.systems.size() << " systems (" << suite.skipped << " skipped by the oracle degree cap)\n";
  for (std::size_t i = 0; i < suite.systems.size(); ++i) {
    const ExactSystem& sys = suite.systems[i];
    const auto F = sys.complex_gens();
    const auto& want = suite.oracle_corners[i];
    SearchOptions opts;
    opts.tol = 1e-8;
    opts.max_degree = 40;
    auto search = find_gcorners(F, opts);
    auto got = minimal_gcorners(search.records, F.front().order());
    c.expect(testing::to_set(got) == testing::to_set(want),
             sys.describe() + ": corners " + testing::show(got, sys.nvars()) + " vs oracle " +
                 testing::show(want, sys.nvars()));
    MourrainSequence plain(F, 1e-8, MourrainMode::plain);
    for (int d = 0; d <= 6; ++d) {
      const DualBasis mac = truncated_dual(F, d, 1e-8);
      const auto stair = testing::staircase(want, sys.nvars(), d);
      c.expect(leads(mac) == stair, sys.describe() + ": complementarity at degree " + std::to_string(d));
      const DualBasis& mou = d == 0 ? plain.current() : plain.advance();
      c.expect(leads(mou) == leads(mac), sys.describe() + ": Mourrain lead set at degree " + std::to_string(d));
    }
  }
}

void criterion8(Check& c) {
  std::vector<ExactSystem> systems = random_suite().systems;
  systems.push_back(testing::make_system("main-ex1", kXY, {"x^2 - x*y^3", "x^4"}));
  for (const auto& sys : systems) {
    const auto F = sys.complex_gens();
    for (int d = 0; d <= 6; ++d) {
      const auto harness = leads(testing::homogenized_slice(F, d, 1e-8));
      const auto direct = leads(sylvester_dual(F, d, 1e-8));
      c.expect(harness == direct, sys.describe() + ": degree " + std::to_string(d) + " harness " +
                                      testing::show(harness, sys.nvars()) + " vs Sylvester " +
                                      testing::show(direct, sys.nvars()));
    }
  }
}

void criterion9(Check& c) {
  std::vector<std::pair<std::vector<Monomial>, std::size_t>> sets{
      {{Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0}, Monomial{0, 0, 2, 0}, Monomial{0, 0, 1, 1}}, 4},
      {{xy(2, 0), xy(1, 9)}, 2},
      {{Monomial{2, 0, 0}, Monomial{1, 2, 0}}, 3},
      {{xy(1, 0), xy(0, 1)}, 2},
      {{}, 2},
      {{xy(2, 0), xy(0, 3)}, 2},
  };
  for (const auto& sys : testing::regression_systems())
    sets.emplace_back(oracle::minimal_leads(oracle::local_buchberger(sys.gens)), sys.nvars());
  const Suite& suite = random_suite();
  for (std::size_t i = 0; i < suite.systems.size(); ++i)
    sets.emplace_back(suite.oracle_corners[i], suite.systems[i].nvars());

  for (const auto& [corners, n] : sets) {
    const HilbertData h = hilbert_data(corners, n);
    const std::string tag = testing::show(corners, n) + ": ";
    for (int d = 0; d <= std::max(h.tight_bound, 0) + 5; ++d)
      c.expect(hilbert_value(corners, n, d) == oracle::brute_hilbert(corners, n, d), tag + "value at " + std::to_string(d));
    for (int d = std::max(h.tight_bound, 0); d <= std::max(h.tight_bound, 0) + 5; ++d)
      c.expect(h.polynomial(Rational(d)) == Rational(static_cast<long>(hilbert_value(corners, n, d))),
               tag + "polynomial at " + std::to_string(d));
  }
}

void criterion10(Check& c) {
  const SystemSpec base = parse_system(kCyclic4Spec);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  for (int trial = 0; trial < 5; ++trial) {
    SystemSpec spec = base;
    for (auto& p : spec.point) p += std::polar(1e-8, angle(rng));
    check_cyclic4_report(c, dualinfo_run(spec), "trial " + std::to_string(trial) + ": ");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"Macaulay truncated dual of {x - y^3, x^2} at degree 3", criterion1},
      {"Sylvester dual of {x - y^3, x^2} at degree 3", criterion2},
      {"g-corner search and standard basis for {x^2 - x*y^3, x^4}", criterion3},
      {"Cyclic-4 at the approximate embedded point", criterion4},
      {"embedded curve at (0.7071068, 0.7071068, 0)", criterion5},
      {"zero-dimensional ideal <x^2 - y^2, y^3>", criterion6},
      {"random systems agree with the exact oracle", criterion7},
      {"explicit homogenization matches the Sylvester dual", criterion8},
      {"Hilbert values, brute-force counts and the Hilbert polynomial", criterion9},
      {"Cyclic-4 outputs stable under 1e-8 point noise", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.log << "    exception: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    std::fputs(c.log.str().c_str(), stdout);
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
