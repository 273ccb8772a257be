#include "numhilbert/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nh {

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw std::invalid_argument("variable count mismatch");
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw std::invalid_argument("variable count mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::shifted(std::size_t i, int k) const {
  Monomial r = *this;
  r.exps_.at(i) += k;
  if (r.exps_[i] < 0) throw std::invalid_argument("negative exponent");
  r.degree_ += k;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial lcm(std::span<const Monomial> ms, std::size_t nvars) {
  Monomial r(nvars);
  for (const auto& m : ms) r = lcm(r, m);
  return r;
}

std::string Monomial::to_string(std::span<const std::string> names, const std::string& prefix) const {
  if (names.size() < exps_.size()) throw std::invalid_argument("not enough variable names");
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += prefix + names[i];
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LocalOrder::LocalOrder(std::size_t nvars, Tiebreak tiebreak, bool leading_t)
    : nvars_(nvars), tiebreak_(tiebreak), leading_t_(leading_t) {
  if (nvars == 0) throw std::invalid_argument("a local order needs at least one variable");
  if (leading_t && nvars < 2) throw std::invalid_argument("extended order needs t plus at least one variable");
}

std::strong_ordering LocalOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) throw std::invalid_argument("monomial has wrong variable count");
  if (a.degree() != b.degree()) return b.degree() <=> a.degree();
  std::size_t first = 0;
  if (leading_t_) {
    if (a[0] != b[0]) return a[0] <=> b[0];
    first = 1;
  }
  if (tiebreak_ == Tiebreak::lex) {
    for (std::size_t i = first; i < nvars_; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
  } else {
    for (std::size_t i = nvars_; i-- > first;)
      if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

LocalOrder LocalOrder::extended() const { return LocalOrder(nvars_ + 1, tiebreak_, true); }

namespace {

void fill_degree(std::size_t var, std::size_t nvars, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    fill_degree(var + 1, nvars, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars == 0) return out;
  std::vector<int> cur(nvars, 0);
  fill_degree(0, nvars, degree, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to(const LocalOrder& order, int max_degree) {
  std::vector<Monomial> out;
  for (int d = max_degree; d >= 0; --d) {
    auto slice = monomials_of_degree(order.nvars(), d);
    std::sort(slice.begin(), slice.end(),
              [&](const Monomial& a, const Monomial& b) { return order.compare_dual(a, b) > 0; });
    out.insert(out.end(), std::make_move_iterator(slice.begin()), std::make_move_iterator(slice.end()));
  }
  return out;
}

MonomialIndex::MonomialIndex(const LocalOrder& order, int max_degree)
    : order_(order), max_degree_(max_degree), monomials_(monomials_up_to(order, max_degree)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonomialIndex::at(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("monomial not in column index");
  return it->second;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace nh
