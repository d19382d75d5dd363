#pragma once

// Laurent polynomials in v with integer coefficients, Z[v, v^-1].

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkdim {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant) : LaurentPoly(monomial(constant, 0)) {}  // NOLINT
  static LaurentPoly monomial(std::int64_t coefficient, int exponent);
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly v_inverse() { return monomial(1, -1); }
  static LaurentPoly from_terms(const std::map<int, std::int64_t>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  // Highest exponent; nullopt for the zero polynomial (degree minus infinity).
  std::optional<int> degree() const;
  std::optional<int> min_degree() const;
  std::int64_t coefficient(int exponent) const;
  std::map<int, std::int64_t> terms() const;

  // v -> v^-1.
  LaurentPoly bar() const;

  LaurentPoly& operator+=(const LaurentPoly& o) { add_scaled(o, 1); return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { add_scaled(o, -1); return *this; }
  // this += sign * a * b without temporaries.
  void add_product(const LaurentPoly& a, const LaurentPoly& b, std::int64_t sign = 1);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    r.add_scaled(a, -1);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.add_product(a, b);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.low_ == b.low_);
  }

  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& o, std::int64_t scale);
  // Grows storage to cover exponents [lo, hi].
  void cover(int lo, int hi);
  void trim();

  int low_ = 0;  // exponent of coeffs_[0]
  std::vector<std::int64_t> coeffs_;
};

}  // namespace gkdim
