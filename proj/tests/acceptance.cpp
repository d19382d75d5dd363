// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkdim/cli.hpp"
#include "gkdim/gk.hpp"
#include "gkdim/hecke.hpp"
#include "gkdim/hermitian.hpp"
#include "gkdim/permutation.hpp"
#include "oracles.hpp"

using namespace gkdim;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Mean wall time of `body` in milliseconds.
double mean_ms(const std::function<void()>& body, int reps = 200) {
  body();
  const auto start = Clock::now();
  for (int i = 0; i < reps; ++i) body();
  return seconds_since(start) * 1000.0 / reps;
}

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s [%d] %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double x, const char* unit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g %s", x, unit);
  return buf;
}

nlohmann::json cli_json(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  gkdim::cli::run(args, in, out, err);
  return nlohmann::json::parse(out.str());
}

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

void criterion_1() {
  const std::string text = "3,3.5,2,1.5,-1,5.5,-1,0,1.1";
  const Weight w = Weight::parse(text);
  const auto r = gk_dimension(w);
  const std::vector<YoungTableau> expected{
      YoungTableau({rats({-1, -1, 0}), rats({2}), rats({3})}),
      YoungTableau({rats({Rational(3, 2), Rational(11, 2)}), rats({Rational(7, 2)})}),
      YoungTableau({rats({Rational(11, 10)})})};
  bool ok = r.tableaux.tableaux == expected && r.a_value == 4 && r.gk_dimension == 32;
  ok = ok && r.tableaux.tableaux[0].shape().row_lengths() == std::vector<std::size_t>{3, 1, 1} &&
       r.tableaux.tableaux[1].shape().row_lengths() == std::vector<std::size_t>{2, 1} &&
       r.tableaux.tableaux[2].shape().row_lengths() == std::vector<std::size_t>{1};
  const auto j = cli_json({"gkdim", "--weight", text});
  ok = ok && j.at("gk_dimension") == 32 && j.at("a_value") == 4;
  const double ms = mean_ms([&] { (void)gk_dimension(Weight::parse(text)); });
  ok = ok && ms < 1.0;
  report(1, ok, "non-integral example: three tableaux, A = 4, GKdim = 32",
         "A=" + std::to_string(r.a_value) + " GKdim=" + std::to_string(r.gk_dimension) + ", " +
             fmt(ms, "ms"));
}

void criterion_2() {
  const std::string text = "6,5,3,2,9,8,7,4,2,1";
  const PQContext ctx(4, 6);
  const Weight w = Weight::parse(text);
  const auto r = gk_pq(w, ctx);
  const YoungTableau expected_p({rats({1, 2}), rats({2, 4}), rats({3, 7}), rats({5, 8}), rats({6}), rats({9})});
  auto column = r.second_column;
  std::sort(column.begin(), column.end(), std::greater<>());
  bool ok = r.xi == BallSignature({3, 2, 1, 1, 1, 1, 1, 0}) && column == rats({8, 7, 4, 2}) && r.m == 4 &&
            r.gk_dimension == 24 && r.orbit_index == 4 && r.tableaux.tableaux.size() == 1 &&
            r.tableaux.tableaux.front() == expected_p;
  const auto j = cli_json({"hermitian", "--weight", text, "--pq", "4,6"});
  ok = ok && j.at("m") == 4 && j.at("gk_dimension") == 24;
  const double ms = mean_ms([&] { (void)gk_pq(Weight::parse(text), ctx); });
  ok = ok && ms < 1.0;
  report(2, ok, "(4,6) example: xi, second column {8,7,4,2}, m = 4, GKdim = 24, orbit 4",
         "m=" + std::to_string(r.m) + " GKdim=" + std::to_string(r.gk_dimension) + ", " + fmt(ms, "ms"));
}

void criterion_3() {
  const auto r = gk_pq(Weight::parse("5,4,3,2,1,9,8,7,6,2"), PQContext(5, 5));
  report(3, r.m == 5 && r.gk_dimension == 25, "su(5,5) example: m = 5, GKdim = 25",
         "m=" + std::to_string(r.m) + " GKdim=" + std::to_string(r.gk_dimension));
}

void criterion_4() {
  auto T = [](std::vector<std::vector<int>> rows) { return RecordingTableau(std::move(rows)); };
  const std::vector<int> gamma{3, 5, 2, 2, 1};
  const std::vector<RecordingTableau> ps{T({{3}}), T({{3, 5}}), T({{2, 5}, {3}}), T({{2, 2}, {3, 5}}), T({{1, 2}, {2, 5}, {3}})};
  const std::vector<RecordingTableau> qs{T({{1}}), T({{1, 2}}), T({{1, 2}, {3}}), T({{1, 2}, {3, 4}}), T({{1, 2}, {3, 4}, {5}})};
  RecordingTableau p, q;
  bool ok = true;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    auto [next, pos] = p.insert(gamma[k]);
    p = std::move(next);
    q.place(pos, static_cast<int>(k + 1));
    ok = ok && p == ps[k] && q == qs[k];
  }
  report(4, ok, "insertion chain for (3,5,2,2,1)", "5 intermediate pairs");
}

void criterion_5() {
  const auto t = rs_of_permutation(Permutation({3, 4, 2, 1}));
  const bool ok = t.p == RecordingTableau({{1, 4}, {2}, {3}}) && t.q == RecordingTableau({{1, 2}, {3}, {4}});
  report(5, ok, "RS of (3,4,2,1)", "P=" + pretty(t.p).substr(0, 3) + "...");
}

void criterion_6() {
  const AlgebraWord word{{Generator::X, 3}, {Generator::Y, 2}, {Generator::X, 1}, {Generator::Y, 1},
                         {Generator::X, 1}, {Generator::Y, 1}, {Generator::X, 1}};
  const auto nf = algebra_normal_form(word);
  report(6, nf == NormalForm{4, 0, 2}, "normal form of x^3 y^2 x y x y x is v^4 x^2",
         "v^" + std::to_string(nf.v_exp) + " y^" + std::to_string(nf.y_exp) + " x^" + std::to_string(nf.x_exp));
}

void criterion_7() {
  auto check_rank = [](std::size_t n, std::size_t& checked) {
    const HeckeAlgebra h(n);
    bool ok = true;
    for (const auto& sigma : h.elements()) {
      ++checked;
      ok = ok && h.a_function(sigma) == a_value_of_permutation(sigma);
    }
    return ok;
  };
  std::size_t checked = 0;
  auto start = Clock::now();
  bool ok = true;
  for (std::size_t n = 1; n <= 4; ++n) ok = check_rank(n, checked) && ok;
  const double small = seconds_since(start);
  start = Clock::now();
  ok = check_rank(5, checked) && ok;
  const double large = seconds_since(start);
  ok = ok && small < 10.0 && large < 600.0;
  report(7, ok, "Hecke a-function equals A(P(sigma)) on S_1..S_5",
         std::to_string(checked) + " elements; n<=4 " + fmt(small, "s") + ", n=5 " + fmt(large, "s"));
}

// Returns the four values of m for an integral (p,q)-dominant weight.
std::array<std::size_t, 4> four_ms(const Weight& w, const PQContext& ctx) {
  const auto tabs = tableau_collection(w);
  const std::size_t by_tableau = tabs.tableaux.front().column(1).size();
  const std::size_t by_deletion = second_column_by_deletion(w, ctx).size();
  const BallSignature xi = xi_signature(w, ctx);
  return {by_tableau, by_deletion, ball_model_m(xi), algebra_normal_form(word_of_signature(xi)).v_exp};
}

bool agree(const std::array<std::size_t, 4>& m) {
  return m[0] == m[1] && m[1] == m[2] && m[2] == m[3];
}

void criterion_8() {
  const auto start = Clock::now();
  std::size_t exhaustive = 0;
  std::size_t bad = 0;
  std::string first_bad;
  auto note = [&](const Weight& w, const PQContext& ctx) {
    if (!agree(four_ms(w, ctx))) {
      if (bad++ == 0) first_bad = w.to_string() + " p=" + std::to_string(ctx.p);
    }
  };
  for (int n = 2; n <= 10; ++n) {
    const int window = n + 2;  // values 0..n+1
    for (int p = 1; p < n; ++p) {
      const int q = n - p;
      const PQContext ctx(p, q);
      // Strictly decreasing black and white value patterns drawn from the window.
      std::vector<bool> black_mask(static_cast<std::size_t>(window), false);
      std::fill(black_mask.begin(), black_mask.begin() + p, true);
      do {
        std::vector<bool> white_mask(static_cast<std::size_t>(window), false);
        std::fill(white_mask.begin(), white_mask.begin() + q, true);
        do {
          std::vector<Rational> entries;
          entries.reserve(static_cast<std::size_t>(n));
          for (int v = window - 1; v >= 0; --v)
            if (black_mask[static_cast<std::size_t>(v)]) entries.emplace_back(v);
          for (int v = window - 1; v >= 0; --v)
            if (white_mask[static_cast<std::size_t>(v)]) entries.emplace_back(v);
          note(Weight(std::move(entries)), ctx);
          ++exhaustive;
        } while (std::prev_permutation(white_mask.begin(), white_mask.end()));
      } while (std::prev_permutation(black_mask.begin(), black_mask.end()));
    }
  }
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const int q = n - p;
    const auto xs = oracle::random_pq_dominant(p, q, -n, 2 * n, rng);
    note(oracle::weight_of(xs), PQContext(p, q));
  }
  const double secs = seconds_since(start);
  const bool ok = bad == 0 && secs < 30.0;
  report(8, ok, "four computations of m agree (exhaustive n <= 10, 500 random n <= 16)",
         std::to_string(exhaustive) + " exhaustive + 500 random, " + std::to_string(bad) + " disagreements" +
             (bad ? " first " + first_bad : "") + ", " + fmt(secs, "s"));
}

void criterion_9() {
  const auto start = Clock::now();
  std::mt19937 rng(99);
  std::size_t bad = 0;
  std::size_t tight = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const int q = n - p;
    auto xs = oracle::random_pq_dominant(p, q, -n, 2 * n, rng);
    const long shift = xs.back() - xs.front();
    for (int k = 0; k < p; ++k) xs[static_cast<std::size_t>(k)] += shift;
    const Weight tilde = oracle::weight_of(xs);
    const PQContext ctx(p, q);
    const auto series = gkdim_series(tilde, ctx, -3, n + 3);
    const long threshold = xs[static_cast<std::size_t>(p)] - xs[static_cast<std::size_t>(p - 1)];
    bool ok = true;
    for (std::size_t k = 0; k < series.size(); ++k) {
      if (k > 0 && series[k].gk_dimension > series[k - 1].gk_dimension) ok = false;
      if (series[k].z > threshold && series[k].gk_dimension != 0) ok = false;
      if (series[k].z == threshold && series[k].gk_dimension > 0) ++tight;
    }
    if (!ok) ++bad;
  }
  const double secs = seconds_since(start);
  report(9, bad == 0 && secs < 10.0, "series in z weakly decreasing and zero beyond the threshold",
         "200 lines, " + std::to_string(bad) + " violations, nonzero at the threshold in " +
             std::to_string(tight) + " of those in range, " + fmt(secs, "s"));
}

void criterion_10() {
  const auto start = Clock::now();
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int p = 1; p < n; ++p) {
      const int q = n - p;
      std::vector<long> xs;
      for (int k = p; k >= 1; --k) xs.push_back(k);
      for (int k = n - 1; k >= p; --k) xs.push_back(k);
      const Weight mu = oracle::weight_of(xs);
      const PQContext ctx(p, q);
      for (long z = -2; z <= n + 2; ++z) {
        const std::size_t got = gk_pq(add_z_zeta(mu, ctx, Rational(z)), ctx).gk_dimension;
        std::size_t expected = 0;
        if (z < std::max(p, q)) expected = static_cast<std::size_t>(p * q);
        else if (z <= n - 1) expected = static_cast<std::size_t>((z + 1) * (n - 1 - z));
        ++checked;
        if (got != expected) ++bad;
      }
    }
  }
  const double secs = seconds_since(start);
  report(10, bad == 0 && secs < 5.0, "piecewise closed form on the model unitary line, p+q <= 12",
         std::to_string(checked) + " points, " + std::to_string(bad) + " mismatches, " + fmt(secs, "s"));
}

void criterion_11() {
  bool ok = true;
  for (std::size_t n = 1; n <= 20; ++n) {
    std::vector<long> dec, inc;
    for (std::size_t i = 0; i < n; ++i) {
      dec.push_back(static_cast<long>(n - i));
      inc.push_back(static_cast<long>(i));
    }
    ok = ok && gk_dimension(oracle::weight_of(dec)).gk_dimension == 0;
    ok = ok && gk_dimension(oracle::weight_of(inc)).gk_dimension == n * (n - 1) / 2;
  }
  report(11, ok, "strictly decreasing gives 0, strictly increasing gives n(n-1)/2", "n = 1..20");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
