#pragma once

// Highest weight Harish-Chandra modules of su(p,q).
//
// For a (p,q)-dominant weight the first p coordinates ("black") and the last q
// ("white") are each strictly decreasing. In the integral case P(lambda) has at
// most two columns and GKdim = m(n-m), m the size of the second column; m is
// also the number of white-black pairs removable from the ball line, and the
// exponent of v in the normal form of x^{a_1} y^{b_1} ... x^{a_r} y^{b_r} in
// Z[v]<x, y | xy = v>. Non-integral weights give GKdim = pq.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gkdim/gk.hpp"
#include "gkdim/weight.hpp"

namespace gkdim {

enum class Ball { White, Black };

// (a_1, b_1, ..., a_r, b_r): alternating white-run and black-run lengths.
class BallSignature {
 public:
  // Throws std::invalid_argument unless the length is even and >= 2 and
  // every entry except a_1 and b_r is positive.
  explicit BallSignature(std::vector<std::size_t> runs);

  const std::vector<std::size_t>& runs() const { return runs_; }
  std::size_t pairs() const { return runs_.size() / 2; }  // r
  std::size_t white_run(std::size_t k) const { return runs_[2 * (k - 1)]; }     // a_k, 1-based
  std::size_t black_run(std::size_t k) const { return runs_[2 * (k - 1) + 1]; } // b_k, 1-based
  std::size_t whites() const;
  std::size_t blacks() const;
  std::vector<Ball> line() const;

  friend bool operator==(const BallSignature&, const BallSignature&) = default;

 private:
  std::vector<std::size_t> runs_;
};

// Run-length encoding of a ball line; a leading black run gets a_1 = 0 and a
// trailing white run gets b_r = 0.
BallSignature signature_of_line(const std::vector<Ball>& line);

struct HermitianReport {
  int p = 0;
  int q = 0;
  bool integral = false;
  // Second-column size (integral) or min(p,q) (non-integral); always the
  // orbit index, and gk_dimension = m(n-m) in both cases.
  std::size_t m = 0;
  std::vector<Rational> second_column;  // top to bottom; integral case only
  std::optional<BallSignature> xi;      // integral case only
  std::size_t gk_dimension = 0;
  std::size_t orbit_index = 0;
  std::size_t orbit_dimension = 0;
  TableauCollection tableaux;
};

// Throws DomainError("pq_dominant", ..., (i,j)) if w is not (p,q)-dominant.
// In the integral case m is computed from the tableau, the deletion
// recursion and the ball model; disagreement throws std::logic_error.
HermitianReport gk_pq(const Weight& w, const PQContext& ctx);

// Second column of P(lambda), top to bottom, by repeatedly deleting lambda_p
// together with the white entries it pairs with.
std::vector<Rational> second_column_by_deletion(const Weight& w, const PQContext& ctx);

BallSignature xi_signature(const Weight& w, const PQContext& ctx);

// G_r from G_1 = min(a_1, b_1), G_{k+1} = G_k + min(a_1+...+a_{k+1} - G_k, b_{k+1}).
std::size_t ball_model_m(const BallSignature& xi);

// Removes adjacent white-black pairs with a stack scan and counts them.
std::size_t ball_model_m_by_simulation(const BallSignature& xi);

enum class Generator { X, Y };

struct AlgebraLetter {
  Generator letter;
  std::size_t exponent;
};

using AlgebraWord = std::vector<AlgebraLetter>;

// v^v_exp y^y_exp x^x_exp.
struct NormalForm {
  std::size_t v_exp = 0;
  std::size_t y_exp = 0;
  std::size_t x_exp = 0;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm algebra_normal_form(const AlgebraWord& word);

// x^{a_1} y^{b_1} ... x^{a_r} y^{b_r}; zero exponents are dropped.
AlgebraWord word_of_signature(const BallSignature& xi);

// Reachability under the local moves WBB <-> BWB and WWB <-> WBW, applied
// anywhere in the line. Throws std::invalid_argument on different ball counts
// or when the line is longer than max_balls.
bool ball_transform_equivalent(const BallSignature& a, const BallSignature& b,
                               std::size_t max_balls = 16);

struct UnitaryInterval {
  int p_prime = 0;
  int q_prime = 0;
  Rational threshold_real;      // max(p', q')
  std::int64_t threshold_int{};  // p' + q' - 1

  bool contains(const Rational& z) const {
    return z <= threshold_real || (z.is_integer() && z <= Rational(threshold_int));
  }
};

// Requires tilde_w (p,q)-dominant with first entry equal to last entry.
UnitaryInterval unitary_interval(const Weight& tilde_w, const PQContext& ctx);

// Closed form of GKdim L(tilde + z zeta) at unitary points, cross-checked
// against gk_pq. Throws DomainError("unitary_point", ...) if z is outside the
// unitary set.
std::size_t unitary_gkdim(const Weight& tilde_w, const PQContext& ctx, const Rational& z);

struct SeriesPoint {
  std::int64_t z;
  std::size_t gk_dimension;
  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

// gk_pq(tilde + z zeta) for integer z in [z_from, z_to].
std::vector<SeriesPoint> gkdim_series(const Weight& tilde_w, const PQContext& ctx,
                                      std::int64_t z_from, std::int64_t z_to);

struct AssociatedVariety {
  std::size_t orbit_index;
  std::size_t orbit_dimension;
  friend bool operator==(const AssociatedVariety&, const AssociatedVariety&) = default;
};

AssociatedVariety associated_variety(const Weight& w, const PQContext& ctx);

// dim of the k-th orbit closure in p^+ for su(p,q), n = p + q.
inline std::size_t orbit_dimension(std::size_t k, std::size_t n) { return k * (n - k); }

}  // namespace gkdim
