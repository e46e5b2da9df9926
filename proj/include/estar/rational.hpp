#ifndef ESTAR_RATIONAL_HPP
#define ESTAR_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "estar/errors.hpp"

namespace estar {

/// Arbitrary-precision rational kept in canonical form (reduced, positive
/// denominator). Backed by GMP. All arithmetic is exact; there is no
/// conversion to floating point anywhere in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}  // NOLINT: implicit by design
  Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  /// Parses "p" or "p/q" (optional leading '-'). Rejects anything else.
  static Rational from_string(const std::string& s);

  /// Canonical form: "p" when the value is an integer, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Numerator as int64 when it fits.
  std::optional<std::int64_t> num_i64() const {
    if (!v_.get_num().fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v_.get_num().get_si());
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// b^e for integer e (e may be negative; b must be nonzero then).
  static Rational pow(const Rational& b, long e);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  // mpq_class accepts whitespace and other bases; be stricter.
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw InputError("bad rational literal: " + s);
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  if (v.get_den() == 0) throw InputError("zero denominator in: " + s);
  v.canonicalize();
  return Rational(v);
}

inline Rational Rational::pow(const Rational& b, long e) {
  if (e == 0) return Rational(1);
  Rational base = b;
  long k = e;
  if (k < 0) {
    if (b.sign() == 0) throw DomainError("zero to a negative power");
    base = Rational(1) / b;
    k = -k;
  }
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

/// lcm of denominators; the common scale used by the integer scan paths.
inline mpz_class lcm_denominator(const mpz_class& acc, const Rational& r) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), r.den().get_mpz_t());
  return out;
}

}  // namespace estar

#endif
