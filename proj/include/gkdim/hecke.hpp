#pragma once

// Hecke algebra of S_n over Z[v, v^-1] with the quadratic relation
// (T_s + v^-1)(T_s - v) = 0, its Kazhdan-Lusztig basis, and Lusztig's
// a-function computed straight from the structure constants of that basis.
//
// This is a small-rank oracle: the a-function table costs O((n!)^3) and is
// only meant to cross-check the tableau formula a(sigma) = A(P(sigma)).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gkdim/laurent.hpp"
#include "gkdim/permutation.hpp"

namespace gkdim {

inline constexpr std::size_t kDefaultHeckeRankBound = 5;

class HeckeAlgebra;

// Element of the Hecke algebra in the standard basis {T_w}.
class HeckeElement {
 public:
  std::size_t n() const { return n_; }

  const LaurentPoly& coefficient(const Permutation& w) const;
  // Nonzero terms only.
  std::map<Permutation, LaurentPoly> terms() const;
  bool is_zero() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  std::string to_string() const;

 private:
  friend class HeckeAlgebra;
  HeckeElement(std::size_t n, std::size_t order) : n_(n), coeffs_(order) {}

  std::size_t n_ = 0;
  std::vector<LaurentPoly> coeffs_;  // indexed by lexicographic rank
};

class HeckeAlgebra {
 public:
  // Throws OracleScopeError if n > rank_bound.
  explicit HeckeAlgebra(std::size_t n, std::size_t rank_bound = kDefaultHeckeRankBound);

  // Instance shared across callers, keyed by (n, rank_bound).
  static const HeckeAlgebra& shared(std::size_t n, std::size_t rank_bound = kDefaultHeckeRankBound);

  std::size_t n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }

  HeckeElement zero() const { return HeckeElement(n_, order()); }
  HeckeElement t(const Permutation& w) const;
  HeckeElement from_terms(const std::map<Permutation, LaurentPoly>& terms) const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement bar(const HeckeElement& a) const;

  // C_w: the bar-invariant element congruent to T_w modulo v^-1 Z[v^-1] T_y.
  const HeckeElement& kl_basis(const Permutation& w) const;

  // Coordinates of x in the KL basis, keyed like elements().
  std::vector<LaurentPoly> kl_coordinates(const HeckeElement& x) const;

  // max over x, y of deg h_{x,y,z} where C_x C_y = sum_z h_{x,y,z} C_z.
  std::size_t a_function(const Permutation& z) const;

 private:
  std::size_t index_of(const Permutation& w) const;
  void check(const HeckeElement& x) const;
  void check(const Permutation& w) const;
  // out = x * T_{s_k}, with k 0-based.
  void right_multiply_simple(const std::vector<LaurentPoly>& x, std::size_t k,
                             std::vector<LaurentPoly>& out) const;
  std::vector<LaurentPoly> right_multiply_t(const std::vector<LaurentPoly>& x, std::size_t w) const;
  void build_kl_basis() const;
  void build_a_table() const;

  std::size_t n_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> length_;
  std::vector<std::vector<std::size_t>> times_simple_;  // [w][k] -> index of w s_{k+1}
  std::vector<std::size_t> parent_;                     // w s for a right descent s
  std::vector<std::size_t> parent_letter_;              // that s, 0-based
  std::vector<std::size_t> by_length_;                  // indices sorted by length
  std::vector<HeckeElement> bar_t_;                     // bar(T_w)

  mutable std::once_flag kl_once_;
  mutable std::vector<HeckeElement> kl_;
  mutable std::vector<std::vector<std::size_t>> kl_support_;
  mutable std::once_flag a_once_;
  mutable std::vector<std::size_t> a_table_;
};

// Convenience wrappers over HeckeAlgebra::shared.
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);
HeckeElement bar_involution(const HeckeElement& a);
HeckeElement kl_basis_element(const Permutation& w, std::size_t rank_bound = kDefaultHeckeRankBound);
std::size_t a_function_definitional(const Permutation& z,
                                    std::size_t rank_bound = kDefaultHeckeRankBound);

}  // namespace gkdim
