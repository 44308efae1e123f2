#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace treealg {

/// Exact rational in canonical form: reduced, positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long numerator, long denominator = 1);  // NOLINT(google-explicit-constructor)

  /// Accepts `p`, `-p`, `p/q`. Throws ParseError on malformed text or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
  [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }
  [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
  /// `p` when the denominator is 1, else `p/q`.
  [[nodiscard]] std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  /// Throws SemanticError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& b) {
    value_ += b.value_;
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    value_ *= b.value_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_{0};
};

}  // namespace treealg
