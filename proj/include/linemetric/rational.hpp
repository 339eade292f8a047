/**
 * @file rational.hpp
 * @brief Exact rational scalar used throughout the library.
 *
 * Rat wraps a GMP rational and keeps it canonical (lowest terms, positive
 * denominator) after every operation. There is no floating-point path.
 */

#ifndef LINEMETRIC_RATIONAL_HPP
#define LINEMETRIC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace linemetric {

class Rat {
public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rat(const mpz_class& integer) : value_(integer) {}
  explicit Rat(mpq_class value);

  /// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
  mpq_class value_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// Binomial coefficient for small non-negative arguments.
std::int64_t binomial(int n, int k);

}  // namespace linemetric

#endif  // LINEMETRIC_RATIONAL_HPP
