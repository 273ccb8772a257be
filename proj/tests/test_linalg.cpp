#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "numhilbert/hilbert.hpp"
#include "numhilbert/kernels.hpp"
#include "numhilbert/linalg.hpp"
#include "numhilbert/macaulay.hpp"
#include "numhilbert/oracle.hpp"
#include "numhilbert/sylvester.hpp"

using namespace nh;
namespace fx = nh::testing;
using kernels::Execution;

namespace {

Eigen::MatrixXcd random_matrix(Eigen::Index r, Eigen::Index c, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

MonomialIndexPtr columns_2d(int d) { return make_index(LocalOrder(2), d); }

}  // namespace

TEST(NumericalKernel, MacExampleDimension) {
  auto sys = fx::regression_systems()[0];
  auto m = macaulay_array<Complex>(sys.complex_gens(), 3);
  ASSERT_EQ(m.rows(), 9u);
  ASSERT_EQ(m.cols(), 10u);
  auto k = numerical_kernel(m, 1e-10);
  EXPECT_EQ(k.basis.cols(), 4);
  EXPECT_EQ(k.rank, 6u);
}

TEST(NumericalKernel, EmptyAndFullRank) {
  EXPECT_EQ(numerical_kernel(Eigen::MatrixXcd(0, 5), 1e-10).basis.cols(), 5);
  EXPECT_EQ(numerical_kernel(Eigen::MatrixXcd::Identity(2, 2), 1e-10).basis.cols(), 0);
}

TEST(NumericalKernel, ResidualAndOrthonormality) {
  for (unsigned seed = 0; seed < 5; ++seed) {
    // rank-4 product, tall and wide shapes
    for (auto [r, c] : {std::pair{30, 12}, std::pair{6, 15}}) {
      Eigen::MatrixXcd m = random_matrix(r, 4, seed) * random_matrix(4, c, seed + 100);
      auto k = numerical_kernel(m, 1e-10);
      EXPECT_EQ(k.rank, 4u);
      EXPECT_EQ(k.basis.cols(), c - 4);
      EXPECT_LT((m * k.basis).norm(), 1e-9 * m.norm());
      const Eigen::MatrixXcd gram = k.basis.adjoint() * k.basis;
      EXPECT_LT((gram - Eigen::MatrixXcd::Identity(c - 4, c - 4)).norm(), 1e-10);
    }
  }
}

TEST(NumericalKernel, AbsoluteCut) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = 1e3;
  m(1, 1) = 1e-2;
  EXPECT_EQ(numerical_kernel(m, 1e-4, RankCut::relative).basis.cols(), 1);
  EXPECT_EQ(numerical_kernel(m, 1e-4, RankCut::absolute).basis.cols(), 0);
}

TEST(NumericalKernel, AgreesWithExactKernelDimension) {
  for (const auto& sys : fx::regression_systems())
    for (int d = 0; d <= 5; ++d) {
      auto exact = macaulay_array<Rational>(sys.gens, d);
      auto numeric = macaulay_array<Complex>(sys.complex_gens(), d);
      EXPECT_EQ(numerical_kernel(numeric, 1e-10).basis.cols(),
                static_cast<Eigen::Index>(oracle::exact_kernel(exact).dimension()))
          << sys.describe() << " d=" << d;
    }
}

TEST(ReduceLeadTerms, OneEliminationStep) {
  auto cols = columns_2d(3);
  Eigen::MatrixXcd rows = Eigen::MatrixXcd::Zero(2, static_cast<Eigen::Index>(cols->size()));
  const auto x = static_cast<Eigen::Index>(cols->at(Monomial{1, 0}));
  const auto y3 = static_cast<Eigen::Index>(cols->at(Monomial{0, 3}));
  rows(0, y3) = 1.0;
  rows(0, x) = 1.0;
  rows(1, y3) = 1.0;
  auto b = reduce_lead_terms(rows, cols, 3, 1e-10);
  EXPECT_EQ(b.lead_set(), (std::set<Monomial>{Monomial{0, 3}, Monomial{1, 0}}));
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto e = b.element(i, 1e-12);
    EXPECT_EQ(e.size(), 1u);
  }
}

TEST(ReduceLeadTerms, ReducedFormAndIdempotence) {
  auto cols = columns_2d(4);
  Eigen::MatrixXcd rows = random_matrix(5, static_cast<Eigen::Index>(cols->size()), 9);
  auto b = reduce_lead_terms(rows, cols, 4, 1e-10);
  ASSERT_EQ(b.size(), 5u);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto li = static_cast<Eigen::Index>(b.lead_columns()[i]);
    for (Eigen::Index j = 0; j < li; ++j) EXPECT_EQ(b.coefficients()(static_cast<Eigen::Index>(i), j), Complex(0.0));
    for (std::size_t k = 0; k < b.size(); ++k)
      EXPECT_NEAR(std::abs(b.coefficients()(static_cast<Eigen::Index>(k), li) - (i == k ? 1.0 : 0.0)), 0.0, 1e-12);
  }
  auto again = reduce_lead_terms(b, 1e-10);
  EXPECT_EQ(again.lead_set(), b.lead_set());
  EXPECT_LT((again.coefficients() - b.coefficients()).norm(), 1e-10);
}

TEST(ReduceLeadTerms, SpanIsPreserved) {
  auto cols = columns_2d(3);
  Eigen::MatrixXcd rows = random_matrix(3, 10, 21);
  auto b = reduce_lead_terms(rows, cols, 3, 1e-10);
  // Every original row lies in the span of the reduced rows.
  Eigen::MatrixXcd q = column_span(b.coefficients().transpose(), 1e-12);
  Eigen::MatrixXcd r = rows.transpose();
  EXPECT_LT((r - q * (q.adjoint() * r)).norm(), 1e-10);
}

TEST(ReduceLeadTerms, DependentRowsThrow) {
  auto cols = columns_2d(2);
  Eigen::MatrixXcd rows = random_matrix(1, 6, 4);
  Eigen::MatrixXcd two(2, 6);
  two << rows, rows;
  EXPECT_THROW(reduce_lead_terms(two, cols, 2, 1e-8), RankDecisionError);
}

TEST(ReduceLeadTerms, MainExampleMixedElement) {
  // S_0^(4) of {x^2 - x*y^3, x^4} contains dy^3 dx + dx^2.
  auto sys = fx::regression_systems()[1];
  auto b = sylvester_dual(sys.complex_gens(), 4, 1e-10);
  bool seen = false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto e = b.element(i, 1e-10).normalized();
    if (e.lead_monomial() != Monomial{1, 3}) continue;
    seen = true;
    EXPECT_NEAR(std::abs(e.coefficient(Monomial{2, 0}) - 1.0), 0.0, 1e-10);
  }
  EXPECT_TRUE(seen);
}

TEST(Kernels, AssembleRowsSerialEqualsParallel) {
  for (const auto& sys : fx::random_systems(10, 77)) {
    auto gens = sys.complex_gens();
    const int d = 6;
    auto serial = macaulay_array<Complex>(gens, d, Execution::serial);
    auto parallel = macaulay_array<Complex>(gens, d, Execution::parallel);
    EXPECT_EQ(serial.row_labels, parallel.row_labels);
    EXPECT_EQ(serial.entries.data, parallel.entries.data) << sys.describe();
  }
}

TEST(Kernels, InclusionExclusionSerialEqualsParallel) {
  const std::vector<Monomial> corners{Monomial{2, 0, 1}, Monomial{0, 3, 0}, Monomial{1, 1, 1}, Monomial{0, 0, 4},
                                      Monomial{3, 1, 0}};
  for (int d = 0; d < 12; ++d)
    EXPECT_EQ(kernels::inclusion_exclusion(corners, 3, d, Execution::serial),
              kernels::inclusion_exclusion(corners, 3, d, Execution::parallel));
}

TEST(Kernels, CommutationRowsSerialEqualsParallel) {
  std::vector<Eigen::MatrixXcd> mu;
  for (unsigned i = 0; i < 3; ++i) mu.push_back(random_matrix(7, 5, 40 + i));
  auto a = kernels::commutation_rows(mu, Execution::serial);
  auto b = kernels::commutation_rows(mu, Execution::parallel);
  EXPECT_EQ(a.rows(), 3 * 5);
  EXPECT_EQ(a.cols(), 3 * 7);
  EXPECT_EQ(a, b);
}

TEST(Kernels, Binomial) {
  EXPECT_EQ(kernels::binomial(5, 2), 10);
  EXPECT_EQ(kernels::binomial(2, 5), 0);
  EXPECT_EQ(kernels::binomial(-1, 0), 0);
  EXPECT_EQ(kernels::binomial(0, 0), 1);
}
