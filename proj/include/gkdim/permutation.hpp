#pragma once

// Permutations of {1..n} in one-line notation, with the Robinson-Schensted
// correspondence and the few Coxeter-theoretic elements the GK-dimension
// algorithm needs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gkdim/tableau.hpp"
#include "gkdim/weight.hpp"

namespace gkdim {

class Permutation {
 public:
  // one_line[i-1] = sigma(i). Throws std::invalid_argument unless it is a
  // rearrangement of 1..n with n >= 1.
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(std::size_t n);
  static Permutation longest(std::size_t n);
  // Simple reflection s_k = (k, k+1), 1 <= k < n.
  static Permutation simple_reflection(std::size_t n, std::size_t k);

  std::size_t size() const { return one_line_.size(); }
  // sigma(i) for 1-based i.
  int operator()(std::size_t i) const { return one_line_[i - 1]; }
  const std::vector<int>& one_line() const { return one_line_; }

  // Number of inversions.
  std::size_t length() const;
  Permutation inverse() const;

  // Position in the lexicographic order of S_n (Lehmer code), 0-based.
  std::uint64_t rank() const;
  static Permutation unrank(std::size_t n, std::uint64_t rank);

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// (a * b)(i) = a(b(i)). Throws SizeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);

// sigma . (lambda+rho): the entry at position sigma(i) of the result is lambda_i.
Weight act(const Permutation& sigma, const Weight& w);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

std::uint64_t factorial(std::size_t n);

// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);

struct PermutationTableaux {
  RecordingTableau p;
  RecordingTableau q;
};

PermutationTableaux rs_of_permutation(const Permutation& sigma);

// A(P(sigma)).
std::size_t a_value_of_permutation(const Permutation& sigma);

// Longest element of the parabolic subgroup generated by s_k for k outside the
// partial column sums of `s`. Throws std::invalid_argument if s has != n boxes.
Permutation parabolic_longest(const Shape& s, std::size_t n);

// The minimal-length sigma making sigma.lambda antidominant: sigma(i) is the
// rank of lambda_i in the increasing order, ties broken by position.
// Throws DomainError for non-integral weights.
Permutation minimal_antidominant_permutation(const Weight& w);

}  // namespace gkdim
