#include "drwedge/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace drwedge {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Parts {
  std::int64_t num;
  std::int64_t den;
};

Parts normalize128(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {checked_narrow(num), checked_narrow(den)};
}

Rational from_i128(i128 num, i128 den) {
  Parts p = normalize128(num, den);
  return Rational(p.num, p.den);  // already reduced; reconstruction is cheap
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  Parts p = normalize128(num, den);
  num_ = p.num;
  den_ = p.den;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::mod(std::int64_t m) const {
  if (m <= 0) throw std::domain_error("modulus must be positive");
  // num - floor(num / (den*m)) * den*m, all exact
  i128 span = i128(den_) * m;
  i128 r = i128(num_) % span;
  if (r < 0) r += span;
  return from_i128(r, den_);
}

Rational Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) -> std::int64_t {
    if (t.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t pos = 0;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
      neg = (t[0] == '-');
      pos = 1;
    }
    if (pos == t.size()) throw std::invalid_argument("sign without digits");
    i128 v = 0;
    for (; pos < t.size(); ++pos) {
      if (t[pos] < '0' || t[pos] > '9') {
        throw std::invalid_argument("malformed rational \"" + std::string(t) +
                                    "\" (use n or n/d)");
      }
      v = v * 10 + (t[pos] - '0');
      if (v > std::numeric_limits<std::int64_t>::max()) {
        throw std::invalid_argument("rational literal out of range");
      }
    }
    return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  };

  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  std::int64_t n = parse_int(s.substr(0, slash));
  std::int64_t d = parse_int(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in rational");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> suggest_rational(double x, std::int64_t max_den,
                                         double tol) {
  if (!std::isfinite(x) || max_den < 1) return std::nullopt;
  // Continued-fraction convergents p_k/q_k until the denominator cap.
  double v = x;
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p = static_cast<std::int64_t>(std::floor(v)), q = 1;
  for (int it = 0; it < 64; ++it) {
    double best = static_cast<double>(p) / static_cast<double>(q);
    if (std::abs(best - x) <= tol * std::max(1.0, std::abs(x))) {
      return Rational(p, q);
    }
    double frac = v - std::floor(v);
    if (frac < 1e-18) break;
    v = 1.0 / frac;
    double a_real = std::floor(v);
    if (a_real > 9e17) break;
    std::int64_t a = static_cast<std::int64_t>(a_real);
    i128 pn = i128(a) * p + p_prev;
    i128 qn = i128(a) * q + q_prev;
    if (qn > max_den) break;
    p_prev = p;
    q_prev = q;
    p = static_cast<std::int64_t>(pn);
    q = static_cast<std::int64_t>(qn);
  }
  double best = static_cast<double>(p) / static_cast<double>(q);
  if (std::abs(best - x) <= tol * std::max(1.0, std::abs(x))) {
    return Rational(p, q);
  }
  return std::nullopt;
}

}  // namespace drwedge
