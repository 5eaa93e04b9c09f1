#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace drwedge {

/// Exact fraction over 64-bit integers, always stored reduced with a positive
/// denominator, so each value has one representation and equality/ordering
/// are exact. Intermediate products run through 128-bit arithmetic and any
/// result outside the 64-bit range throws std::overflow_error instead of
/// wrapping. Every structural decision in this library (zero diagonals,
/// criticality, augmentation schedules) is made on these, never on floats.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: integers convert implicitly
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  /// n + 1/2 for some integer n.
  bool is_half_integer() const { return den_ == 2; }

  double to_double() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Remainder of floor division by a positive integer, in [0, m).
  Rational mod(std::int64_t m) const;

  /// Parses "n" or "n/d" (optional sign on n). Throws std::invalid_argument.
  static Rational parse(std::string_view s);
  std::string str() const;

 private:
  std::int64_t num_{0};
  std::int64_t den_{1};
};

/// Best rational approximation p/q of x with q <= max_den, found by continued
/// fractions; nullopt when no convergent lands within tol of x. Convenience
/// for interactive use only -- classification never calls this implicitly,
/// rationality of inputs is always declared by the caller.
std::optional<Rational> suggest_rational(double x, std::int64_t max_den,
                                         double tol = 1e-12);

}  // namespace drwedge
