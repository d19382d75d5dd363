#include "gkdim/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "gkdim/errors.hpp"

namespace gkdim {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
}

Rational Rational::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.empty()) throw ParseError("empty rational");

  Rational r;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    r.value_ = mpq_class(num, den);
    r.value_.canonicalize();
    return r;
  }

  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    bool negative = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    const auto d = body.find('.');
    std::string_view int_part = body.substr(0, d);
    std::string_view frac_part = body.substr(d + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("malformed decimal: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    r.value_ = mpq_class(negative ? mpz_class(-num) : num, den);
    r.value_.canonicalize();
    return r;
  }

  r.value_ = mpq_class(parse_integer(s, text), 1);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::int64_t Rational::floor_int() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("rational floor out of int64 range");
  return q.get_si();
}

std::int64_t Rational::to_int() const {
  if (!is_integer()) throw std::domain_error("rational " + to_string() + " is not an integer");
  return floor_int();
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(numerator_string());
  const std::size_t h2 = std::hash<std::string>{}(denominator_string());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace gkdim
