#include "gkdim/hermitian.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "gkdim/errors.hpp"

namespace gkdim {

namespace {

void require_pq_dominant(const Weight& w, const PQContext& ctx) {
  if (auto bad = pq_dominance_violation(w, ctx)) {
    throw DomainError("pq_dominant",
                      "weight is not (p,q)-dominant: lambda_" + std::to_string(bad->first) +
                          " - lambda_" + std::to_string(bad->second) + " is not a positive integer",
                      bad);
  }
}

void require_integral_pq_dominant(const Weight& w, const PQContext& ctx) {
  require_pq_dominant(w, ctx);
  if (!differ_by_integer(w[0], w[ctx.p])) {
    throw DomainError("integral",
                      "lambda_1 - lambda_" + std::to_string(ctx.p + 1) + " is not an integer",
                      std::make_pair(std::size_t{1}, static_cast<std::size_t>(ctx.p + 1)));
  }
}

std::vector<Rational> blacks_of(const Weight& w, const PQContext& ctx) {
  return {w.entries().begin(), w.entries().begin() + ctx.p};
}

std::vector<Rational> whites_of(const Weight& w, const PQContext& ctx) {
  return {w.entries().begin() + ctx.p, w.entries().end()};
}

}  // namespace

// ---------------------------------------------------------------- signature

BallSignature::BallSignature(std::vector<std::size_t> runs) : runs_(std::move(runs)) {
  if (runs_.empty() || runs_.size() % 2 != 0) {
    throw std::invalid_argument("ball signature needs an even, nonzero number of runs");
  }
  for (std::size_t i = 1; i + 1 < runs_.size(); ++i) {
    if (runs_[i] == 0) throw std::invalid_argument("interior ball runs must be positive");
  }
}

std::size_t BallSignature::whites() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < runs_.size(); i += 2) total += runs_[i];
  return total;
}

std::size_t BallSignature::blacks() const {
  std::size_t total = 0;
  for (std::size_t i = 1; i < runs_.size(); i += 2) total += runs_[i];
  return total;
}

std::vector<Ball> BallSignature::line() const {
  std::vector<Ball> out;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    out.insert(out.end(), runs_[i], i % 2 == 0 ? Ball::White : Ball::Black);
  }
  return out;
}

BallSignature signature_of_line(const std::vector<Ball>& line) {
  std::vector<std::size_t> runs;
  Ball expected = Ball::White;
  std::size_t count = 0;
  for (Ball b : line) {
    if (b != expected) {
      runs.push_back(count);
      count = 0;
      expected = b;
    }
    ++count;
  }
  runs.push_back(count);
  if (runs.size() % 2 != 0) runs.push_back(0);
  return BallSignature(std::move(runs));
}

BallSignature xi_signature(const Weight& w, const PQContext& ctx) {
  require_integral_pq_dominant(w, ctx);
  const auto blacks = blacks_of(w, ctx);
  const auto whites = whites_of(w, ctx);
  const std::size_t p = blacks.size();
  const std::size_t q = whites.size();
  std::size_t used_b = 0;
  std::size_t used_w = 0;

  // Whites still unplaced that sit at or above the next black, ties going
  // to the white ball.
  auto next_white_run = [&] {
    std::size_t a = 0;
    if (used_b == p) {
      a = q - used_w;
    } else {
      while (used_w + a < q && whites[used_w + a] >= blacks[used_b]) ++a;
    }
    used_w += a;
    return a;
  };
  auto next_black_run = [&] {
    std::size_t b = 0;
    if (used_w == q) {
      b = p - used_b;
    } else {
      while (used_b + b < p && blacks[used_b + b] > whites[used_w]) ++b;
    }
    used_b += b;
    return b;
  };

  std::vector<std::size_t> runs;
  while (true) {
    const std::size_t a = next_white_run();
    const std::size_t b = next_black_run();
    if (a == 0 && b == 0 && !runs.empty()) break;
    runs.push_back(a);
    runs.push_back(b);
  }
  return BallSignature(std::move(runs));
}

std::size_t ball_model_m(const BallSignature& xi) {
  std::size_t g = std::min(xi.white_run(1), xi.black_run(1));
  std::size_t whites_so_far = xi.white_run(1);
  for (std::size_t k = 2; k <= xi.pairs(); ++k) {
    whites_so_far += xi.white_run(k);
    g += std::min(whites_so_far - g, xi.black_run(k));
  }
  return g;
}

std::size_t ball_model_m_by_simulation(const BallSignature& xi) {
  std::size_t open_whites = 0;
  std::size_t removed = 0;
  for (Ball b : xi.line()) {
    if (b == Ball::White) {
      ++open_whites;
    } else if (open_whites > 0) {
      --open_whites;
      ++removed;
    }
  }
  return removed;
}

// ---------------------------------------------------------------- deletion

std::vector<Rational> second_column_by_deletion(const Weight& w, const PQContext& ctx) {
  require_integral_pq_dominant(w, ctx);
  auto blacks = blacks_of(w, ctx);
  auto whites = whites_of(w, ctx);
  std::vector<Rational> column;
  while (!blacks.empty() && !whites.empty()) {
    const Rational& last_black = blacks.back();
    if (last_black > whites.front()) break;  // strictly decreasing: one column
    if (last_black <= whites.back()) {
      // Delete lambda_p and lambda_{p+q}.
      column.push_back(whites.back());
      whites.pop_back();
    } else {
      // Delete lambda_p and lambda_{p+k}, lambda_{p+k+1}, ... where k is the
      // last white position with lambda_{p+k} >= lambda_p.
      std::size_t k = 0;
      while (k + 1 < whites.size() && whites[k + 1] >= last_black) ++k;
      column.push_back(whites[k]);
      whites.resize(k);
    }
    blacks.pop_back();
  }
  return column;
}

// ---------------------------------------------------------------- report

HermitianReport gk_pq(const Weight& w, const PQContext& ctx) {
  require_pq_dominant(w, ctx);
  HermitianReport r;
  r.p = ctx.p;
  r.q = ctx.q;
  const std::size_t n = w.size();
  r.tableaux = tableau_collection(w);
  r.integral = differ_by_integer(w[0], w[ctx.p]);

  if (r.integral) {
    if (r.tableaux.tableaux.size() != 1 || r.tableaux.tableaux.front().shape().num_columns() > 2) {
      throw std::logic_error("integral (p,q)-dominant weight produced more than two columns");
    }
    const auto& tab = r.tableaux.tableaux.front();
    r.second_column = tab.column(1);
    r.xi = xi_signature(w, ctx);
    const std::size_t by_ball = ball_model_m(*r.xi);
    if (second_column_by_deletion(w, ctx) != r.second_column || by_ball != r.second_column.size()) {
      throw std::logic_error("second-column computations disagree for weight " + w.to_string());
    }
    r.m = by_ball;
  } else {
    r.m = static_cast<std::size_t>(std::min(ctx.p, ctx.q));
  }
  r.gk_dimension = r.m * (n - r.m);
  r.orbit_index = r.m;
  r.orbit_dimension = orbit_dimension(r.orbit_index, n);
  return r;
}

AssociatedVariety associated_variety(const Weight& w, const PQContext& ctx) {
  const auto r = gk_pq(w, ctx);
  return {r.orbit_index, r.orbit_dimension};
}

// ---------------------------------------------------------------- algebra

NormalForm algebra_normal_form(const AlgebraWord& word) {
  // Running product v^m y^s x^t; appending y^e cancels min(t, e) copies of xy.
  NormalForm nf;
  for (const auto& [letter, e] : word) {
    if (letter == Generator::X) {
      nf.x_exp += e;
      continue;
    }
    const std::size_t cancel = std::min(nf.x_exp, e);
    nf.v_exp += cancel;
    nf.x_exp -= cancel;
    nf.y_exp += e - cancel;
  }
  return nf;
}

AlgebraWord word_of_signature(const BallSignature& xi) {
  AlgebraWord word;
  for (std::size_t k = 1; k <= xi.pairs(); ++k) {
    if (xi.white_run(k)) word.push_back({Generator::X, xi.white_run(k)});
    if (xi.black_run(k)) word.push_back({Generator::Y, xi.black_run(k)});
  }
  return word;
}

// ---------------------------------------------------------------- moves

bool ball_transform_equivalent(const BallSignature& a, const BallSignature& b, std::size_t max_balls) {
  if (a.whites() != b.whites() || a.blacks() != b.blacks()) {
    throw std::invalid_argument("ball signatures have different white/black counts");
  }
  const std::size_t len = a.whites() + a.blacks();
  if (len > max_balls || len > 63) {
    throw std::invalid_argument("ball line of length " + std::to_string(len) + " exceeds search bound");
  }
  // Bit i set = black ball at position i.
  auto encode = [](const std::vector<Ball>& line) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == Ball::Black) bits |= std::uint64_t{1} << i;
    }
    return bits;
  };
  const std::uint64_t start = encode(a.line());
  const std::uint64_t target = encode(b.line());
  // Window patterns read left to right, bit 0 = leftmost.
  constexpr std::uint64_t kWBB = 0b110, kBWB = 0b101, kWWB = 0b100, kWBW = 0b010;
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> frontier{start};
  while (!frontier.empty()) {
    const std::uint64_t cur = frontier.front();
    frontier.pop_front();
    if (cur == target) return true;
    for (std::size_t i = 0; i + 3 <= len; ++i) {
      const std::uint64_t window = (cur >> i) & 0b111;
      std::uint64_t replacement;
      if (window == kWBB) replacement = kBWB;
      else if (window == kBWB) replacement = kWBB;
      else if (window == kWWB) replacement = kWBW;
      else if (window == kWBW) replacement = kWWB;
      else continue;
      const std::uint64_t next = (cur & ~(std::uint64_t{0b111} << i)) | (replacement << i);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return false;
}

// ---------------------------------------------------------------- unitary line

UnitaryInterval unitary_interval(const Weight& tilde_w, const PQContext& ctx) {
  require_pq_dominant(tilde_w, ctx);
  const std::size_t n = tilde_w.size();
  if (tilde_w[0] != tilde_w[n - 1]) {
    throw DomainError("first_equals_last",
                      "lambda~_1 must equal lambda~_n (got " + tilde_w[0].to_string() + " and " +
                          tilde_w[n - 1].to_string() + ")",
                      std::make_pair(std::size_t{1}, n));
  }
  const Rational one(1);
  UnitaryInterval iv;
  iv.p_prime = 1;
  while (iv.p_prime < ctx.p && tilde_w[iv.p_prime - 1] - tilde_w[iv.p_prime] == one) ++iv.p_prime;
  iv.q_prime = 1;
  while (iv.q_prime < ctx.q && tilde_w[n - 1 - iv.q_prime] - tilde_w[n - iv.q_prime] == one) ++iv.q_prime;
  iv.threshold_real = Rational(std::max(iv.p_prime, iv.q_prime));
  iv.threshold_int = iv.p_prime + iv.q_prime - 1;
  return iv;
}

std::size_t unitary_gkdim(const Weight& tilde_w, const PQContext& ctx, const Rational& z) {
  const auto iv = unitary_interval(tilde_w, ctx);
  if (!iv.contains(z)) {
    throw DomainError("unitary_point", "z = " + z.to_string() + " is not a unitary point (z <= " +
                                           iv.threshold_real.to_string() + ", or integer z <= " +
                                           std::to_string(iv.threshold_int) + ")");
  }
  const std::size_t n = tilde_w.size();
  const std::size_t pq = static_cast<std::size_t>(ctx.p) * static_cast<std::size_t>(ctx.q);
  std::size_t closed_form = pq;
  if (z.is_integer()) {
    const std::int64_t zi = z.to_int();
    if (zi >= std::max(ctx.p, ctx.q)) {
      closed_form = static_cast<std::size_t>((zi + 1) * (static_cast<std::int64_t>(n) - zi - 1));
    }
  }
  const auto direct = gk_pq(add_z_zeta(tilde_w, ctx, z), ctx).gk_dimension;
  if (direct != closed_form) {
    throw std::logic_error("unitary closed form " + std::to_string(closed_form) +
                           " disagrees with tableau value " + std::to_string(direct) + " at z = " +
                           z.to_string());
  }
  return closed_form;
}

std::vector<SeriesPoint> gkdim_series(const Weight& tilde_w, const PQContext& ctx, std::int64_t z_from,
                                      std::int64_t z_to) {
  require_pq_dominant(tilde_w, ctx);
  if (z_from > z_to) {
    throw DomainError("z_range", "empty z range [" + std::to_string(z_from) + ", " +
                                     std::to_string(z_to) + "]");
  }
  std::vector<SeriesPoint> out;
  out.reserve(static_cast<std::size_t>(z_to - z_from + 1));
  for (std::int64_t z = z_from; z <= z_to; ++z) {
    out.push_back({z, gk_pq(add_z_zeta(tilde_w, ctx, Rational(static_cast<long>(z))), ctx).gk_dimension});
  }
  return out;
}

}  // namespace gkdim
