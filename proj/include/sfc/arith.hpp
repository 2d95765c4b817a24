#pragma once

// Exact integer and rational arithmetic.
//
// Every classification decision in this library is made on Rational values;
// integers are 64-bit and every operation that could overflow is checked
// and reported through std::overflow_error.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sfc {

using Integer = std::int64_t;

namespace detail {

inline Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Integer checked_neg(Integer a) { return checked_sub(0, a); }

inline Integer checked_abs(Integer a) { return a < 0 ? checked_neg(a) : a; }

// floor(a / b) for b != 0.
inline Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative of a mod b in [0, |b|).
inline Integer floor_mod(Integer a, Integer b) {
  Integer r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

}  // namespace detail

/// Greatest common divisor, always non-negative; gcd(0, 0) = 0.
inline Integer gcd(Integer a, Integer b) {
  a = detail::checked_abs(a);
  b = detail::checked_abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct BezoutResult {
  Integer g;
  Integer x;
  Integer y;

  friend bool operator==(const BezoutResult&, const BezoutResult&) = default;
};

/// Extended Euclid: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
inline BezoutResult bezout(Integer a, Integer b) {
  if (a == 0 && b == 0) throw std::invalid_argument("bezout: both arguments are zero");
  Integer old_r = detail::checked_abs(a), r = detail::checked_abs(b);
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, detail::checked_sub(old_s, detail::checked_mul(q, s)));
    old_t = std::exchange(t, detail::checked_sub(old_t, detail::checked_mul(q, t)));
  }
  if (a < 0) old_s = -old_s;
  if (b < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

/// Exact fraction in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Integer n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n, Integer d) : num_(n), den_(d) { canonicalize(); }

  Integer num() const { return num_; }
  Integer den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Integer floor() const { return detail::floor_div(num_, den_); }
  Integer ceil() const { return -detail::floor_div(-num_, den_); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const { return from_canonical(detail::checked_neg(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Integer g = gcd(a.den_, b.den_);
    const Integer da = a.den_ / g;
    const Integer db = b.den_ / g;
    return Rational(detail::checked_add(detail::checked_mul(a.num_, db), detail::checked_mul(b.num_, da)),
                    detail::checked_mul(a.den_, db));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so intermediate products stay small.
    const Integer g1 = gcd(a.num_, b.den_);
    const Integer g2 = gcd(b.num_, a.den_);
    return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2), detail::checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __extension__ using Wide = __int128;  // products of two int64 always fit
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// "n/d", or "n" for integers.
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  /// Parses "n" or "n/d" (optional leading sign on either part).
  static Rational parse(std::string_view text);

 private:
  static Rational from_canonical(Integer n, Integer d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  void canonicalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_neg(num_);
      den_ = detail::checked_neg(den_);
    }
    const Integer g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
    if (num_ == 0) den_ = 1;
  }

  Integer num_ = 0;
  Integer den_ = 1;
};

/// Canonical Rational num/den.
inline Rational reduce(Integer num, Integer den) { return Rational(num, den); }

namespace detail {

inline Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
    value = checked_add(checked_mul(value, 10), c - '0');
  }
  return negative ? -value : value;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
  return Rational(detail::parse_integer(text.substr(0, slash)), detail::parse_integer(text.substr(slash + 1)));
}

/// Non-negative angle stored as an exact rational multiple of pi.
class PiRational {
 public:
  PiRational() = default;
  explicit PiRational(Rational coeff) : coeff_(coeff) {
    if (coeff_.sign() < 0) throw std::domain_error("negative angle: " + coeff_.to_string() + "pi");
  }
  PiRational(Integer num, Integer den) : PiRational(Rational(num, den)) {}

  static PiRational full_turn() { return PiRational(Rational(2)); }

  const Rational& coeff() const { return coeff_; }
  double radians() const;

  friend bool operator==(const PiRational&, const PiRational&) = default;
  friend std::strong_ordering operator<=>(const PiRational& a, const PiRational& b) { return a.coeff_ <=> b.coeff_; }

  /// "<num>/<den>pi", or "<num>pi" for integer multiples (so "0pi", "1pi", "2pi").
  std::string to_string() const { return coeff_.to_string() + "pi"; }

  friend std::ostream& operator<<(std::ostream& os, const PiRational& a) { return os << a.to_string(); }

  /// Accepts "<num>/<den>pi", "<num>pi", "pi" and the bare "0".
  static PiRational parse(std::string_view text) {
    if (text == "0") return PiRational();
    constexpr std::string_view suffix = "pi";
    if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix)
      throw std::invalid_argument("malformed angle (expected <num>/<den>pi): " + std::string(text));
    const auto head = text.substr(0, text.size() - suffix.size());
    if (head.empty()) return PiRational(Rational(1));
    return PiRational(Rational::parse(head));
  }

 private:
  Rational coeff_;
};

inline double PiRational::radians() const {
  constexpr double pi = 3.14159265358979323846;
  return coeff_.to_double() * pi;
}

enum class Handedness { Left, Right };

inline std::string_view to_string(Handedness h) { return h == Handedness::Left ? "left" : "right"; }

inline Handedness parse_handedness(std::string_view text) {
  if (text == "left" || text == "Left" || text == "L") return Handedness::Left;
  if (text == "right" || text == "Right" || text == "R") return Handedness::Right;
  throw std::invalid_argument("handedness must be left or right, got: " + std::string(text));
}

struct FiberCoeffs {
  Integer b1;
  Integer b2;

  friend bool operator==(const FiberCoeffs&, const FiberCoeffs&) = default;
};

/// Seifert invariants of the two exceptional fibres of the torus-knot fibration of S^3:
/// the unique 0 < b1 < s, 0 < b2 < r with -rs + b1*r + b2*s = -1 (left) or +1 (right).
inline FiberCoeffs fiber_coeffs(Integer r, Integer s, Handedness hand) {
  if (!(r > s && s > 1)) throw std::invalid_argument("fiber_coeffs: need r > s > 1");
  if (gcd(r, s) != 1) throw std::invalid_argument("fiber_coeffs: r and s must be coprime");
  const Integer sign = hand == Handedness::Left ? -1 : 1;
  // b1*r = sign (mod s)
  const auto [g, r_inv, unused] = bezout(r, s);
  (void)g;
  (void)unused;
  const Integer b1 = detail::floor_mod(detail::checked_mul(sign, r_inv), s);
  const Integer rhs = detail::checked_add(detail::checked_mul(r, s), sign);
  const Integer b2 = (rhs - detail::checked_mul(b1, r)) / s;
  return {b1, b2};
}

}  // namespace sfc
