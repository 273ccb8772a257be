#include "numhilbert/kernels.hpp"

#include <stdexcept>

namespace nh::kernels {

std::int64_t binomial(std::int64_t p, std::int64_t q) {
  if (q < 0 || p < q) return 0;
  if (q > p - q) q = p - q;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= q; ++i) {
    r = r * (p - q + i) / i;
    if (r > INT64_MAX) throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::int64_t>(r);
}

namespace {

std::int64_t term(int lcm_degree, std::size_t nvars, int degree) {
  const auto n = static_cast<std::int64_t>(nvars);
  return binomial(static_cast<std::int64_t>(degree) - lcm_degree + n - 1, n - 1);
}

// Depth-first over subsets, carrying the running lcm.
std::int64_t subsets_from(std::span<const Monomial> corners, std::size_t next, const Monomial& acc, int sign,
                          std::size_t nvars, int degree) {
  std::int64_t sum = 0;
  for (std::size_t k = next; k < corners.size(); ++k) {
    Monomial l = lcm(acc, corners[k]);
    if (l.degree() > degree) continue;  // this and every superset contribute 0
    sum += -sign * term(l.degree(), nvars, degree);
    sum += subsets_from(corners, k + 1, l, -sign, nvars, degree);
  }
  return sum;
}

}  // namespace

std::int64_t inclusion_exclusion(std::span<const Monomial> corners, std::size_t nvars, int degree, Execution exec) {
  if (degree < 0) return 0;
  if (corners.size() >= 63) throw std::length_error("too many corners for subset enumeration");
  if (exec == Execution::serial) {
    return term(0, nvars, degree) + subsets_from(corners, 0, Monomial(nvars), 1, nvars, degree);
  }
  const std::int64_t total = std::int64_t{1} << corners.size();
  std::int64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t mask = 0; mask < total; ++mask) {
    std::vector<int> e(nvars, 0);
    int bits = 0;
    for (std::size_t k = 0; k < corners.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      ++bits;
      for (std::size_t v = 0; v < nvars; ++v) e[v] = std::max(e[v], corners[k][v]);
    }
    int deg = 0;
    for (int x : e) deg += x;
    std::int64_t t = term(deg, nvars, degree);
    sum += (bits & 1) ? -t : t;
  }
  return sum;
}

Eigen::MatrixXcd commutation_rows(std::span<const Eigen::MatrixXcd> mu, Execution exec) {
  const auto nv = static_cast<std::int64_t>(mu.size());
  if (nv == 0) return {};
  const Eigen::Index r = mu[0].rows();
  const Eigen::Index g = mu[0].cols();
  for (const auto& block : mu)
    if (block.rows() != r || block.cols() != g) throw std::invalid_argument("inconsistent derivative blocks");
  const std::int64_t npairs = nv * (nv - 1) / 2;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(npairs * g, nv * r);

  auto fill_pair = [&](std::int64_t i, std::int64_t l, std::int64_t pair) {
    for (Eigen::Index m = 0; m < g; ++m) {
      const Eigen::Index row = pair * g + m;
      for (Eigen::Index j = 0; j < r; ++j) {
        out(row, l * r + j) += mu[i](j, m);
        out(row, i * r + j) -= mu[l](j, m);
      }
    }
  };

  if (exec == Execution::serial) {
    std::int64_t pair = 0;
    for (std::int64_t i = 0; i < nv; ++i)
      for (std::int64_t l = i + 1; l < nv; ++l) fill_pair(i, l, pair++);
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t pair = 0; pair < npairs; ++pair) {
    // invert the row-major pair enumeration (i < l)
    std::int64_t i = 0, rem = pair;
    while (rem >= nv - 1 - i) {
      rem -= nv - 1 - i;
      ++i;
    }
    fill_pair(i, i + 1 + rem, pair);
  }
  return out;
}

}  // namespace nh::kernels
