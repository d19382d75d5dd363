#include "gkdim/laurent.hpp"

#include <algorithm>

namespace gkdim {

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coefficient);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, std::int64_t>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

std::optional<int> LaurentPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

std::optional<int> LaurentPoly::min_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return low_;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  const long idx = static_cast<long>(exponent) - low_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[idx];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (coeffs_.empty()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -*degree();
  return p;
}

void LaurentPoly::cover(int lo, int hi) {
  if (coeffs_.empty()) {
    low_ = lo;
    coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    return;
  }
  const int cur_hi = low_ + static_cast<int>(coeffs_.size()) - 1;
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
    low_ = lo;
  }
  if (hi > cur_hi) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(hi - cur_hi), 0);
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](std::int64_t c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  const auto lead = first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  low_ += static_cast<int>(lead);
}

void LaurentPoly::add_scaled(const LaurentPoly& o, std::int64_t scale) {
  if (o.coeffs_.empty() || scale == 0) return;
  cover(o.low_, o.low_ + static_cast<int>(o.coeffs_.size()) - 1);
  const std::size_t offset = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[offset + i] += scale * o.coeffs_[i];
  trim();
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b, std::int64_t sign) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return;
  const int lo = a.low_ + b.low_;
  const int hi = lo + static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 2;
  cover(lo, hi);
  const std::size_t offset = static_cast<std::size_t>(lo - low_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const std::int64_t ai = sign * a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs_[offset + i + j] += ai * b.coeffs_[j];
  }
  trim();
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace gkdim
