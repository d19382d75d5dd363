#include "gkdim/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "gkdim/errors.hpp"

namespace gkdim {

namespace {

const LaurentPoly kZeroPoly;

// v - v^-1
const LaurentPoly& quadratic_coefficient() {
  static const LaurentPoly c = LaurentPoly::v() - LaurentPoly::v_inverse();
  return c;
}

// Bar-invariant h agreeing with f in all exponents >= 0.
LaurentPoly symmetrize_nonnegative_part(const LaurentPoly& f) {
  LaurentPoly h;
  for (const auto& [e, c] : f.terms()) {
    if (e < 0) continue;
    h += LaurentPoly::monomial(c, e);
    if (e > 0) h += LaurentPoly::monomial(c, -e);
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------- element

const LaurentPoly& HeckeElement::coefficient(const Permutation& w) const {
  if (w.size() != n_) throw SizeMismatch("permutation size does not match Hecke element");
  return coeffs_[w.rank()];
}

std::map<Permutation, LaurentPoly> HeckeElement::terms() const {
  std::map<Permutation, LaurentPoly> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace(Permutation::unrank(n_, i), coeffs_[i]);
  }
  return out;
}

bool HeckeElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw SizeMismatch("adding Hecke elements of different rank");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.n_ != n_) throw SizeMismatch("subtracting Hecke elements of different rank");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x) {
  HeckeElement out(x.n_, x.coeffs_.size());
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) out.coeffs_[i].add_product(c, x.coeffs_[i]);
  return out;
}

std::string HeckeElement::to_string() const {
  std::string out;
  for (const auto& [w, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")T" + w.to_string();
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- algebra

HeckeAlgebra::HeckeAlgebra(std::size_t n, std::size_t rank_bound) : n_(n) {
  if (n < 1) throw std::invalid_argument("Hecke algebra needs n >= 1");
  if (n > rank_bound) {
    throw OracleScopeError("Hecke oracle rank " + std::to_string(n) + " exceeds bound " +
                           std::to_string(rank_bound));
  }
  elements_ = all_permutations(n);
  const std::size_t order = elements_.size();
  length_.resize(order);
  times_simple_.assign(order, std::vector<std::size_t>(n - 1));
  parent_.assign(order, 0);
  parent_letter_.assign(order, 0);
  for (std::size_t w = 0; w < order; ++w) {
    length_[w] = elements_[w].length();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      auto v = elements_[w].one_line();
      std::swap(v[k], v[k + 1]);
      times_simple_[w][k] = Permutation(std::move(v)).rank();
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (elements_[w].one_line()[k] > elements_[w].one_line()[k + 1]) {
        parent_[w] = times_simple_[w][k];
        parent_letter_[w] = k;
        break;
      }
    }
  }
  by_length_.resize(order);
  for (std::size_t i = 0; i < order; ++i) by_length_[i] = i;
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [&](std::size_t a, std::size_t b) { return length_[a] < length_[b]; });

  // bar(T_w) = bar(T_{ws}) (T_s + v^-1 - v) along a reduced word.
  bar_t_.assign(order, zero());
  for (std::size_t w : by_length_) {
    if (length_[w] == 0) {
      bar_t_[w].coeffs_[w] = LaurentPoly(1);
      continue;
    }
    const auto& prev = bar_t_[parent_[w]].coeffs_;
    auto& out = bar_t_[w].coeffs_;
    right_multiply_simple(prev, parent_letter_[w], out);
    for (std::size_t i = 0; i < order; ++i) out[i].add_product(prev[i], quadratic_coefficient(), -1);
  }
}

const HeckeAlgebra& HeckeAlgebra::shared(std::size_t n, std::size_t rank_bound) {
  if (n > rank_bound) {
    throw OracleScopeError("Hecke oracle rank " + std::to_string(n) + " exceeds bound " +
                           std::to_string(rank_bound));
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<HeckeAlgebra>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[n];
  if (!slot) slot = std::make_unique<HeckeAlgebra>(n, n);
  return *slot;
}

std::size_t HeckeAlgebra::index_of(const Permutation& w) const {
  check(w);
  return w.rank();
}

void HeckeAlgebra::check(const HeckeElement& x) const {
  if (x.n_ != n_) throw SizeMismatch("Hecke element of rank " + std::to_string(x.n_) +
                                     " used in algebra of rank " + std::to_string(n_));
}

void HeckeAlgebra::check(const Permutation& w) const {
  if (w.size() != n_) throw SizeMismatch("permutation of size " + std::to_string(w.size()) +
                                         " used in algebra of rank " + std::to_string(n_));
}

HeckeElement HeckeAlgebra::t(const Permutation& w) const {
  HeckeElement x = zero();
  x.coeffs_[index_of(w)] = LaurentPoly(1);
  return x;
}

HeckeElement HeckeAlgebra::from_terms(const std::map<Permutation, LaurentPoly>& terms) const {
  HeckeElement x = zero();
  for (const auto& [w, c] : terms) x.coeffs_[index_of(w)] += c;
  return x;
}

void HeckeAlgebra::right_multiply_simple(const std::vector<LaurentPoly>& x, std::size_t k,
                                         std::vector<LaurentPoly>& out) const {
  out.assign(x.size(), LaurentPoly());
  for (std::size_t w = 0; w < x.size(); ++w) {
    if (x[w].is_zero()) continue;
    const std::size_t ws = times_simple_[w][k];
    out[ws] += x[w];
    // T_w T_s = T_{ws} + (v - v^-1) T_w when ws < w.
    if (length_[ws] < length_[w]) out[w].add_product(x[w], quadratic_coefficient());
  }
}

std::vector<LaurentPoly> HeckeAlgebra::right_multiply_t(const std::vector<LaurentPoly>& x,
                                                        std::size_t w) const {
  std::vector<std::size_t> word;
  for (std::size_t cur = w; length_[cur] > 0; cur = parent_[cur]) word.push_back(parent_letter_[cur]);
  std::vector<LaurentPoly> acc = x;
  std::vector<LaurentPoly> tmp;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    right_multiply_simple(acc, *it, tmp);
    acc.swap(tmp);
  }
  return acc;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  check(a);
  check(b);
  HeckeElement out = zero();
  for (std::size_t y = 0; y < order(); ++y) {
    if (b.coeffs_[y].is_zero()) continue;
    const auto at = right_multiply_t(a.coeffs_, y);
    for (std::size_t w = 0; w < order(); ++w) out.coeffs_[w].add_product(b.coeffs_[y], at[w]);
  }
  return out;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& a) const {
  check(a);
  HeckeElement out = zero();
  for (std::size_t w = 0; w < order(); ++w) {
    if (a.coeffs_[w].is_zero()) continue;
    out += a.coeffs_[w].bar() * bar_t_[w];
  }
  return out;
}

void HeckeAlgebra::build_kl_basis() const {
  const std::size_t order = this->order();
  kl_.assign(order, zero());
  kl_support_.assign(order, {});
  std::vector<LaurentPoly> tmp;
  for (std::size_t w : by_length_) {
    auto& x = kl_[w].coeffs_;
    if (length_[w] == 0) {
      x[w] = LaurentPoly(1);
    } else {
      // C_{ws} C_s with C_s = T_s + v^-1, then strip the lower C_y that
      // carry nonnegative powers of v.
      const auto& prev = kl_[parent_[w]].coeffs_;
      right_multiply_simple(prev, parent_letter_[w], x);
      for (std::size_t i = 0; i < order; ++i) x[i].add_product(prev[i], LaurentPoly::v_inverse());
      for (auto it = by_length_.rbegin(); it != by_length_.rend(); ++it) {
        const std::size_t y = *it;
        if (y == w || length_[y] >= length_[w] || x[y].is_zero()) continue;
        const auto top = x[y].degree();
        if (!top || *top < 0) continue;
        const LaurentPoly h = symmetrize_nonnegative_part(x[y]);
        for (std::size_t u : kl_support_[y]) x[u].add_product(h, kl_[y].coeffs_[u], -1);
      }
    }
    for (std::size_t u = 0; u < order; ++u) {
      if (!x[u].is_zero()) kl_support_[w].push_back(u);
    }
  }
}

const HeckeElement& HeckeAlgebra::kl_basis(const Permutation& w) const {
  const std::size_t idx = index_of(w);
  std::call_once(kl_once_, [this] { build_kl_basis(); });
  return kl_[idx];
}

std::vector<LaurentPoly> HeckeAlgebra::kl_coordinates(const HeckeElement& x) const {
  check(x);
  std::call_once(kl_once_, [this] { build_kl_basis(); });
  std::vector<LaurentPoly> acc = x.coeffs_;
  std::vector<LaurentPoly> out(order());
  for (auto it = by_length_.rbegin(); it != by_length_.rend(); ++it) {
    const std::size_t z = *it;
    if (acc[z].is_zero()) continue;
    out[z] = acc[z];
    for (std::size_t u : kl_support_[z]) acc[u].add_product(out[z], kl_[z].coeffs_[u], -1);
  }
  return out;
}

void HeckeAlgebra::build_a_table() const {
  std::call_once(kl_once_, [this] { build_kl_basis(); });
  const std::size_t order = this->order();
  std::vector<long> best(order, -1);
  std::vector<std::vector<LaurentPoly>> right(order);  // right[u] = C_x T_u
  std::vector<LaurentPoly> acc(order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t u : by_length_) {
      if (length_[u] == 0) {
        right[u] = kl_[x].coeffs_;
      } else {
        right_multiply_simple(right[parent_[u]], parent_letter_[u], right[u]);
      }
    }
    for (std::size_t y = 0; y < order; ++y) {
      std::fill(acc.begin(), acc.end(), LaurentPoly());
      for (std::size_t u : kl_support_[y]) {
        const LaurentPoly& c = kl_[y].coeffs_[u];
        for (std::size_t w = 0; w < order; ++w) {
          if (!right[u][w].is_zero()) acc[w].add_product(c, right[u][w]);
        }
      }
      for (auto it = by_length_.rbegin(); it != by_length_.rend(); ++it) {
        const std::size_t z = *it;
        if (acc[z].is_zero()) continue;
        const LaurentPoly h = acc[z];
        best[z] = std::max<long>(best[z], *h.degree());
        for (std::size_t u : kl_support_[z]) acc[u].add_product(h, kl_[z].coeffs_[u], -1);
      }
    }
  }
  a_table_.resize(order);
  for (std::size_t z = 0; z < order; ++z) {
    if (best[z] < 0) throw std::logic_error("negative a-value for " + elements_[z].to_string());
    a_table_[z] = static_cast<std::size_t>(best[z]);
  }
}

std::size_t HeckeAlgebra::a_function(const Permutation& z) const {
  const std::size_t idx = index_of(z);
  std::call_once(a_once_, [this] { build_a_table(); });
  return a_table_[idx];
}

// ---------------------------------------------------------------- wrappers

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  return HeckeAlgebra::shared(a.n(), a.n()).multiply(a, b);
}

HeckeElement bar_involution(const HeckeElement& a) {
  return HeckeAlgebra::shared(a.n(), a.n()).bar(a);
}

HeckeElement kl_basis_element(const Permutation& w, std::size_t rank_bound) {
  return HeckeAlgebra::shared(w.size(), rank_bound).kl_basis(w);
}

std::size_t a_function_definitional(const Permutation& z, std::size_t rank_bound) {
  return HeckeAlgebra::shared(z.size(), rank_bound).a_function(z);
}

}  // namespace gkdim
