#include <doctest.h>

#include <random>

#include "gkdim/errors.hpp"
#include "gkdim/hermitian.hpp"
#include "oracles.hpp"

using namespace gkdim;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

AlgebraWord word(std::initializer_list<std::pair<char, std::size_t>> letters) {
  AlgebraWord out;
  for (auto [c, e] : letters) out.push_back({c == 'x' ? Generator::X : Generator::Y, e});
  return out;
}

}  // namespace

TEST_CASE("ten-entry example with (p,q) = (4,6)") {
  const Weight w = Weight::parse("6,5,3,2,9,8,7,4,2,1");
  const PQContext ctx(4, 6);
  CHECK(xi_signature(w, ctx) == BallSignature({3, 2, 1, 1, 1, 1, 1, 0}));
  CHECK(second_column_by_deletion(w, ctx) == rats({2, 4, 7, 8}));
  const auto r = gk_pq(w, ctx);
  CHECK(r.integral);
  CHECK(r.m == 4);
  CHECK(r.gk_dimension == 24);
  CHECK(r.orbit_index == 4);
  CHECK(r.orbit_dimension == 24);
  CHECK(r.tableaux.tableaux.front() ==
        YoungTableau({rats({1, 2}), rats({2, 4}), rats({3, 7}), rats({5, 8}), rats({6}), rats({9})}));
}

TEST_CASE("su(5,5) example") {
  const auto r = gk_pq(Weight::parse("5,4,3,2,1,9,8,7,6,2"), PQContext(5, 5));
  CHECK(r.xi == BallSignature({4, 3, 1, 2}));
  CHECK(r.m == 5);
  CHECK(r.gk_dimension == 25);
}

TEST_CASE("ties put the white ball first") {
  CHECK(xi_signature(oracle::weight_of({4, 3, 1, 0}), PQContext(2, 2)) == BallSignature({0, 2, 2, 0}));
  CHECK(xi_signature(oracle::weight_of({2, 1, 2, 1}), PQContext(2, 2)) == BallSignature({1, 1, 1, 1}));
  CHECK(gk_pq(oracle::weight_of({2, 1, 2, 1}), PQContext(2, 2)).m == 2);
}

TEST_CASE("non-integral weights give pq") {
  const Weight w{Rational(5, 2), Rational(3, 2), Rational(0), Rational(-1), Rational(-2)};
  const auto r = gk_pq(w, PQContext(2, 3));
  CHECK_FALSE(r.integral);
  CHECK(r.gk_dimension == 6);
  CHECK(r.orbit_index == 2);
  CHECK_FALSE(r.xi.has_value());
  CHECK(r.second_column.empty());
  CHECK_THROWS_AS(xi_signature(w, PQContext(2, 3)), DomainError);
}

TEST_CASE("domain errors name the offending pair") {
  try {
    gk_pq(oracle::weight_of({1, 2, 3, 2}), PQContext(2, 2));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.precondition() == "pq_dominant");
    REQUIRE(e.indices());
    CHECK(*e.indices() == std::pair<std::size_t, std::size_t>{1, 2});
  }
  CHECK_THROWS_AS(gk_pq(oracle::weight_of({1, 2, 3}), PQContext(2, 2)), InvalidContext);
}

TEST_CASE("ball signatures") {
  CHECK_THROWS_AS(BallSignature({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(BallSignature({1, 0, 3, 1}), std::invalid_argument);
  const BallSignature s({0, 2, 1, 0});
  CHECK(s.whites() == 1);
  CHECK(s.blacks() == 2);
  CHECK(s.line() == std::vector<Ball>{Ball::Black, Ball::Black, Ball::White});
  CHECK(signature_of_line(s.line()) == s);
  CHECK(ball_model_m(s) == 0);
  CHECK(ball_model_m(BallSignature({3, 2, 1, 1, 1, 1, 1, 0})) == 4);
}

TEST_CASE("algebra normal form") {
  CHECK(algebra_normal_form(word({{'x', 3}, {'y', 2}, {'x', 1}, {'y', 1}, {'x', 1}, {'y', 1}, {'x', 1}})) ==
        NormalForm{4, 0, 2});
  CHECK(algebra_normal_form(word({{'y', 2}, {'x', 1}})) == NormalForm{0, 2, 1});
  CHECK(algebra_normal_form({}) == NormalForm{});
  const auto w = word_of_signature(BallSignature({0, 2, 1, 0}));
  REQUIRE(w.size() == 2);
  CHECK(w[0].letter == Generator::Y);
  CHECK(w[1].letter == Generator::X);
}

TEST_CASE("local ball moves") {
  CHECK(ball_transform_equivalent(BallSignature({1, 2}), BallSignature({0, 1, 1, 1})));
  CHECK_FALSE(ball_transform_equivalent(BallSignature({0, 2, 1, 0}), BallSignature({1, 2})));
  CHECK_THROWS_AS(ball_transform_equivalent(BallSignature({1, 2}), BallSignature({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(ball_transform_equivalent(BallSignature({20, 1}), BallSignature({20, 1})), std::invalid_argument);
}

TEST_CASE("property: lines related by local moves have the same m") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = 3 + rng() % 10;
    std::vector<Ball> line;
    for (std::size_t i = 0; i < len; ++i) line.push_back(rng() % 2 ? Ball::Black : Ball::White);
    const BallSignature start = signature_of_line(line);
    for (int step = 0; step < 20; ++step) {
      const std::size_t i = rng() % (len - 2);
      const Ball a = line[i], b = line[i + 1], c = line[i + 2];
      const Ball W = Ball::White, B = Ball::Black;
      if (a == W && b == B && c == B) line[i] = B, line[i + 1] = W;        // WBB -> BWB
      else if (a == B && b == W && c == B) line[i] = W, line[i + 1] = B;   // BWB -> WBB
      else if (a == W && b == W && c == B) line[i + 1] = B, line[i + 2] = W;  // WWB -> WBW
      else if (a == W && b == B && c == W) line[i + 1] = W, line[i + 2] = B;  // WBW -> WWB
    }
    const BallSignature end = signature_of_line(line);
    CHECK(ball_transform_equivalent(start, end));
    CHECK(ball_model_m(start) == ball_model_m(end));
  }
}

TEST_CASE("property: four computations of m agree with brute-force oracles") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 7);
    const int q = 1 + static_cast<int>(rng() % 7);
    const auto xs = oracle::random_pq_dominant(p, q, -3, p + q + 3, rng);
    const Weight w = oracle::weight_of(xs);
    const PQContext ctx(p, q);
    const BallSignature xi = xi_signature(w, ctx);
    CHECK(xi.line() == oracle::ball_line_of(xs, p));
    const auto m = gk_pq(w, ctx).m;
    CHECK(ball_model_m(xi) == m);
    CHECK(ball_model_m_by_simulation(xi) == m);
    CHECK(algebra_normal_form(word_of_signature(xi)).v_exp == m);
    CHECK(oracle::literal_pair_removal(xi.line(), rng) == m);
    CHECK(second_column_by_deletion(w, ctx).size() == m);
    CHECK(m <= static_cast<std::size_t>(std::min(p, q)));
  }
}

TEST_CASE("unitary interval and closed form") {
  const Weight mu = oracle::weight_of({2, 1, 4, 3, 2});
  const PQContext ctx(2, 3);
  const auto iv = unitary_interval(mu, ctx);
  CHECK(iv.p_prime == 2);
  CHECK(iv.q_prime == 3);
  CHECK(iv.threshold_real == Rational(3));
  CHECK(iv.threshold_int == 4);
  CHECK(iv.contains(Rational(5, 2)));
  CHECK_FALSE(iv.contains(Rational(7, 2)));
  CHECK(iv.contains(Rational(4)));
  CHECK(unitary_gkdim(mu, ctx, Rational(1, 2)) == 6);
  CHECK(unitary_gkdim(mu, ctx, Rational(2)) == 6);
  CHECK(unitary_gkdim(mu, ctx, Rational(3)) == 4);
  CHECK(unitary_gkdim(mu, ctx, Rational(4)) == 0);
  CHECK_THROWS_AS(unitary_gkdim(mu, ctx, Rational(5)), DomainError);
  CHECK_THROWS_AS(unitary_interval(oracle::weight_of({3, 1, 4, 3, 2}), ctx), DomainError);
  CHECK(xi_signature(add_z_zeta(mu, ctx, Rational(3)), ctx) == BallSignature({0, 1, 1, 1, 2, 0}));
}

TEST_CASE("series and threshold") {
  const Weight mu = oracle::weight_of({2, 1, 4, 3, 2});
  const PQContext ctx(2, 3);
  const auto s = gkdim_series(mu, ctx, 0, 5);
  const std::vector<std::size_t> expected{6, 6, 6, 4, 0, 0};
  REQUIRE(s.size() == expected.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].z == static_cast<std::int64_t>(i));
    CHECK(s[i].gk_dimension == expected[i]);
  }
  CHECK_THROWS_AS(gkdim_series(mu, ctx, 2, 1), DomainError);
}

TEST_CASE("property: unitary closed form holds on random unitary lines") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 6);
    const int q = 1 + static_cast<int>(rng() % 6);
    auto xs = oracle::random_pq_dominant(p, q, -4, p + q + 4, rng);
    const long shift = xs.back() - xs.front();
    for (int i = 0; i < p; ++i) xs[static_cast<std::size_t>(i)] += shift;
    const Weight w = oracle::weight_of(xs);
    const PQContext ctx(p, q);
    const auto iv = unitary_interval(w, ctx);
    for (long z = -3; z <= iv.threshold_int; ++z) {
      // unitary_gkdim throws std::logic_error if the closed form and the
      // tableau computation disagree.
      CHECK_NOTHROW(unitary_gkdim(w, ctx, Rational(z)));
      const Rational half(2 * z + 1, 2);
      if (half <= iv.threshold_real) CHECK(unitary_gkdim(w, ctx, half) == static_cast<std::size_t>(p * q));
    }
  }
}

TEST_CASE("associated variety") {
  const auto av = associated_variety(Weight::parse("6,5,3,2,9,8,7,4,2,1"), PQContext(4, 6));
  CHECK(av == AssociatedVariety{4, 24});
  CHECK(orbit_dimension(0, 7) == 0);
  CHECK(orbit_dimension(3, 7) == 12);
}
