#pragma once

// Exact rational numbers backed by GMP.
//
// Values are always in lowest terms with a positive denominator. Text input
// accepts integers ("-3"), fractions ("7/2") and exact decimals ("3.5",
// "-0.25"); output is "a" or "a/b".

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gkdim {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(long numerator, long denominator);

  static Rational parse(std::string_view text);

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  // Exact floor; throws std::overflow_error when the result does not fit.
  std::int64_t floor_int() const;
  // Requires is_integer(); throws std::domain_error otherwise.
  std::int64_t to_int() const;

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// True iff a - b is an integer.
inline bool differ_by_integer(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return true;
  return (a - b).is_integer();
}

}  // namespace gkdim

template <>
struct std::hash<gkdim::Rational> {
  std::size_t operator()(const gkdim::Rational& r) const noexcept { return r.hash(); }
};
