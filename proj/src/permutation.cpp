#include "gkdim/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gkdim/errors.hpp"

namespace gkdim {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const std::size_t n = one_line_.size();
  if (n == 0) throw std::invalid_argument("permutation of an empty set");
  std::vector<bool> seen(n + 1, false);
  for (int v : one_line_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n: " + to_string());
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Permutation(std::move(v));
}

Permutation Permutation::simple_reflection(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw std::invalid_argument("simple reflection index out of range");
  auto v = identity(n).one_line_;
  std::swap(v[k - 1], v[k]);
  return Permutation(std::move(v));
}

std::size_t Permutation::length() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    for (std::size_t j = i + 1; j < one_line_.size(); ++j) {
      if (one_line_[i] > one_line_[j]) ++inv;
    }
  }
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) v[one_line_[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(v));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t Permutation::rank() const {
  const std::size_t n = one_line_.size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (one_line_[j] < one_line_[i]) ++smaller_later;
    }
    r += smaller_later * factorial(n - 1 - i);
  }
  return r;
}

Permutation Permutation::unrank(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("permutation rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    v.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(one_line_[i]);
  }
  return s + ")";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("cannot compose permutations of sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  std::vector<int> v(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) v[i - 1] = a(static_cast<std::size_t>(b(i)));
  return Permutation(std::move(v));
}

Weight act(const Permutation& sigma, const Weight& w) {
  if (sigma.size() != w.size()) throw SizeMismatch("permutation and weight sizes differ");
  std::vector<Rational> out(w.size());
  for (std::size_t i = 1; i <= w.size(); ++i) out[sigma(i) - 1] = w[i - 1];
  return Weight(std::move(out));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw SizeMismatch("bruhat comparison of different sizes");
  const std::size_t n = x.size();
  // x <= y iff #{j <= i : x(j) >= k} <= #{j <= i : y(j) >= k} for all i, k.
  for (std::size_t k = 1; k <= n; ++k) {
    int cx = 0;
    int cy = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (static_cast<std::size_t>(x(i)) >= k) ++cx;
      if (static_cast<std::size_t>(y(i)) >= k) ++cy;
      if (cx > cy) return false;
    }
  }
  return true;
}

PermutationTableaux rs_of_permutation(const Permutation& sigma) {
  auto [p, q] = rs_pair(sigma.one_line());
  return {std::move(p), std::move(q)};
}

std::size_t a_value_of_permutation(const Permutation& sigma) {
  return column_statistic(rs_of_permutation(sigma).p.shape());
}

Permutation parabolic_longest(const Shape& s, std::size_t n) {
  if (s.boxes() != n) {
    throw std::invalid_argument("shape has " + std::to_string(s.boxes()) + " boxes, expected " +
                                std::to_string(n));
  }
  // Each column is a block of consecutive positions reversed in place.
  std::vector<int> v;
  v.reserve(n);
  int start = 0;
  for (std::size_t c : s.column_sizes()) {
    for (std::size_t j = c; j >= 1; --j) v.push_back(start + static_cast<int>(j));
    start += static_cast<int>(c);
  }
  return Permutation(std::move(v));
}

Permutation minimal_antidominant_permutation(const Weight& w) {
  if (!is_integral(w)) {
    throw DomainError("integral", "minimal antidominant permutation needs an integral weight");
  }
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  std::vector<int> v(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) v[order[rank]] = static_cast<int>(rank + 1);
  return Permutation(std::move(v));
}

}  // namespace gkdim
