#include "gkdim/weight.hpp"

#include <string>

#include "gkdim/errors.hpp"

namespace gkdim {

Weight::Weight(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("a weight needs at least one coordinate");
}

Weight Weight::parse(std::string_view text) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    entries.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(entries));
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].to_string();
  }
  return out;
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return false;
  const Rational shift = b.entries_.back() - a.entries_.back();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.entries_[i] + shift != b.entries_[i]) return false;
  }
  return true;
}

PQContext::PQContext(int p_, int q_) : p(p_), q(q_) {
  if (p < 1 || q < 1) {
    throw InvalidContext("p and q must be positive, got (" + std::to_string(p) + "," +
                         std::to_string(q) + ")");
  }
}

void PQContext::check_matches(const Weight& w) const {
  if (static_cast<std::size_t>(n()) != w.size()) {
    throw InvalidContext("p+q = " + std::to_string(n()) + " does not match weight length " +
                         std::to_string(w.size()));
  }
}

Weight canonicalize(const Weight& w) {
  std::vector<Rational> out(w.entries().begin(), w.entries().end());
  const Rational last = out.back();
  for (auto& x : out) x -= last;
  return Weight(std::move(out));
}

bool is_integral(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!differ_by_integer(w[i], w[0])) return false;
  }
  return true;
}

bool is_antidominant(const Weight& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (differ_by_integer(w[i], w[j]) && w[i] > w[j]) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> pq_dominance_violation(const Weight& w,
                                                                          const PQContext& ctx) {
  ctx.check_matches(w);
  const std::size_t p = ctx.p;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (i + 1 == p) continue;  // the pair (p, p+1) straddles the two halves
    if (w[i].is_integer() && w[i + 1].is_integer()) {
      if (w[i] <= w[i + 1]) return std::make_pair(i + 1, i + 2);
      continue;
    }
    const Rational gap = w[i] - w[i + 1];
    if (!gap.is_integer() || gap.sign() <= 0) return std::make_pair(i + 1, i + 2);
  }
  return std::nullopt;
}

bool is_pq_dominant(const Weight& w, const PQContext& ctx) {
  return !pq_dominance_violation(w, ctx).has_value();
}

Weight add_z_zeta(const Weight& w, const PQContext& ctx, const Rational& z) {
  ctx.check_matches(w);
  std::vector<Rational> out(w.entries().begin(), w.entries().end());
  for (int i = 0; i < ctx.p; ++i) out[i] += z;
  return Weight(std::move(out));
}

}  // namespace gkdim
