#pragma once

// Weights of sl(n) in lambda+rho coordinates.
//
// A Weight stores (lambda_1, ..., lambda_n) with lambda+rho = sum lambda_i e_i.
// Because e_1 + ... + e_n = 0, two coordinate vectors that differ by a constant
// describe the same weight; operator== implements that equivalence.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gkdim/rational.hpp"

namespace gkdim {

class Weight {
 public:
  explicit Weight(std::vector<Rational> entries);
  Weight(std::initializer_list<Rational> entries) : Weight(std::vector<Rational>(entries)) {}

  // Comma-separated integers, fractions or exact decimals; whitespace ignored.
  static Weight parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  // Exact entry-by-entry comparison (no shift equivalence).
  bool same_coordinates(const Weight& other) const { return entries_ == other.entries_; }

  std::string to_string() const;

  friend bool operator==(const Weight& a, const Weight& b);

 private:
  std::vector<Rational> entries_;
};

// Signature (p, q) of su(p,q); p, q >= 1.
struct PQContext {
  int p;
  int q;

  PQContext(int p_, int q_);
  int n() const { return p + q; }
  void check_matches(const Weight& w) const;  // throws InvalidContext
};

// Representative with last entry 0.
Weight canonicalize(const Weight& w);

bool is_integral(const Weight& w);

// lambda_i <= lambda_j whenever i < j and lambda_i - lambda_j is an integer.
bool is_antidominant(const Weight& w);

// First 1-based pair (i, j), i < j inside one half, with lambda_i - lambda_j
// not a positive integer. Consecutive pairs are checked, which suffices.
std::optional<std::pair<std::size_t, std::size_t>> pq_dominance_violation(const Weight& w,
                                                                          const PQContext& ctx);

bool is_pq_dominant(const Weight& w, const PQContext& ctx);

// Adds z to the first p entries (lambda + z*zeta).
Weight add_z_zeta(const Weight& w, const PQContext& ctx, const Rational& z);

}  // namespace gkdim
