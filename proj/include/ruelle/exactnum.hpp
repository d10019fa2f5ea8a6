#pragma once

// Exact scalars: rationals, the real quadratic field Q(sqrt d), and complex
// numbers over it.  All types are immutable values.

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "ruelle/errors.hpp"

namespace ruelle {

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool fits64(i128 x) {
  return x >= static_cast<i128>(INT64_MIN) && x <= static_cast<i128>(INT64_MAX);
}

}  // namespace detail

/// Rational number p/q kept in lowest terms with q > 0.  Arithmetic is done
/// in 128 bits and reduced; a result that does not fit int64 throws
/// OverflowError rather than wrapping.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() = default;
  constexpr Rational(int_type n) : num_(n) {}  // NOLINT(implicit)
  Rational(int_type n, int_type d) { *this = from_wide(n, d); }

  [[nodiscard]] int_type num() const { return num_; }
  [[nodiscard]] int_type den() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  [[nodiscard]] Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const {
    if (num_ == INT64_MIN) throw OverflowError("negation of INT64_MIN");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    using detail::i128;
    i128 g = detail::gcd128(x.den_, y.den_);
    i128 n = static_cast<i128>(x.num_) * (y.den_ / g) +
             static_cast<i128>(y.num_) * (x.den_ / g);
    i128 d = static_cast<i128>(x.den_ / g) * y.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    using detail::i128;
    i128 g1 = detail::gcd128(x.num_, y.den_);
    i128 g2 = detail::gcd128(y.num_, x.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = (x.num_ / g1) * static_cast<i128>(y.num_ / g2);
    i128 d = (x.den_ / g2) * static_cast<i128>(y.den_ / g1);
    return from_wide(n, d);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw DivisionByZero("rational division by zero");
    return x * y.reciprocal();
  }
  [[nodiscard]] Rational reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return from_wide(den_, num_);
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    using detail::i128;
    i128 l = static_cast<i128>(x.num_) * y.den_;
    i128 r = static_cast<i128>(y.num_) * x.den_;
    return l <=> r;
  }

  /// Canonical serialization "p/q" (q printed even when 1).
  [[nodiscard]] std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  /// Display form: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string pretty() const {
    return den_ == 1 ? std::to_string(num_) : str();
  }

  /// Parses "p", "p/q", "-p/q" (whitespace not allowed).
  static Rational parse(std::string_view s) {
    auto parse_int = [&](std::string_view t) -> int_type {
      if (t.empty()) throw ParseError("empty integer in rational '" + std::string(s) + "'");
      std::size_t i = 0;
      bool neg = false;
      if (t[0] == '-' || t[0] == '+') {
        neg = t[0] == '-';
        i = 1;
      }
      if (i == t.size()) throw ParseError("bad rational '" + std::string(s) + "'");
      detail::i128 v = 0;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') throw ParseError("bad rational '" + std::string(s) + "'");
        v = v * 10 + (t[i] - '0');
        if (v > static_cast<detail::i128>(INT64_MAX)) throw OverflowError("integer literal too large");
      }
      return static_cast<int_type>(neg ? -v : v);
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
  }

  static Rational from_wide(detail::i128 n, detail::i128 d) {
    if (d == 0) throw DivisionByZero("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (!detail::fits64(n) || !detail::fits64(d)) throw OverflowError("rational exceeds int64");
    Rational r;
    r.num_ = static_cast<int_type>(n);
    r.den_ = static_cast<int_type>(d);
    return r;
  }

 private:
  int_type num_ = 0;
  int_type den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.pretty(); }

/// n = s^2 * d with d squarefree.  Returns {s, d}; n must be positive.
inline std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n) {
  if (n <= 0) throw NegativeInput("squarefree_decompose needs n > 0");
  std::int64_t s = 1;
  std::int64_t d = 1;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2 == 1) d *= p;
  }
  d *= n;
  return {s, d};
}

/// Exact rational square root when it exists.
inline std::optional<Rational> exact_rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
    for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
      if (static_cast<detail::i128>(c) * c == v) return c;
    return std::nullopt;
  };
  auto n = isqrt(q.num());
  auto d = isqrt(q.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

/// a + b*sqrt(d) with d a positive squarefree integer.  Canonical form: when
/// b == 0 the radicand is 1, and d == 1 folds b into a, so equality of values
/// is structural equality.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(a) {}  // NOLINT(implicit)
  QuadExt(std::int64_t a) : a_(a) {}  // NOLINT(implicit)
  QuadExt(Rational a, Rational b, std::int64_t d) : a_(a), b_(b), d_(d) {
    if (d < 1) throw NegativeInput("radicand must be positive");
    auto [s, sf] = squarefree_decompose(d);
    b_ *= Rational(s);
    d_ = sf;
    normalize();
  }

  /// r * sqrt(d)
  static QuadExt surd(Rational r, std::int64_t d) { return QuadExt(Rational(0), r, d); }

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }
  [[nodiscard]] std::int64_t d() const { return d_; }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
  }

  /// Sign of the represented real number, decided without floating point.
  [[nodiscard]] int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 d (never equal for squarefree d > 1)
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    return lhs > rhs ? sa : sb;
  }

  [[nodiscard]] QuadExt conjugate() const {
    QuadExt r = *this;
    r.b_ = -b_;
    return r;
  }
  /// a^2 - b^2 d
  [[nodiscard]] Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

  QuadExt operator-() const {
    QuadExt r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    auto d = common_radicand(x, y);
    return make(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    auto d = common_radicand(x, y);
    return make(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    common_radicand(x, y);
    Rational n = y.norm();
    if (n.is_zero()) throw DivisionByZero("division by a zero QuadExt");
    QuadExt num = x * y.conjugate();
    return make(num.a_ / n, num.b_ / n, num.d_);
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  /// The radicand the two operands share; throws when both carry distinct
  /// irrational parts.
  static std::int64_t common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    if (x.d_ != y.d_)
      throw IncompatibleRadicand("sqrt(" + std::to_string(x.d_) + ") vs sqrt(" +
                                 std::to_string(y.d_) + ")");
    return x.d_;
  }

  /// Human form, e.g. "-1/3*sqrt(3)" or "1/2 + 1/4*sqrt(2)".
  [[nodiscard]] std::string pretty() const {
    if (is_rational()) return a_.pretty();
    std::string surd;
    if (b_ == Rational(1))
      surd = "sqrt(" + std::to_string(d_) + ")";
    else if (b_ == Rational(-1))
      surd = "-sqrt(" + std::to_string(d_) + ")";
    else
      surd = b_.pretty() + "*sqrt(" + std::to_string(d_) + ")";
    if (a_.is_zero()) return surd;
    if (b_.sign() < 0) {
      return a_.pretty() + " - " + QuadExt::surd(-b_, d_).pretty();
    }
    return a_.pretty() + " + " + surd;
  }

 private:
  static QuadExt make(Rational a, Rational b, std::int64_t d) {
    QuadExt r;
    r.a_ = a;
    r.b_ = b;
    r.d_ = d;
    r.normalize();
    return r;
  }
  void normalize() {
    if (d_ == 1) {
      a_ += b_;
      b_ = Rational(0);
    }
    if (b_.is_zero()) d_ = 1;
  }

  Rational a_{};
  Rational b_{};
  std::int64_t d_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.pretty(); }

inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

/// Exact ordering of two real numbers of Q(sqrt d).
inline std::strong_ordering quad_compare_real(const QuadExt& x, const QuadExt& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// sqrt(q) = r*sqrt(d), d the squarefree part of num*den.
inline QuadExt sqrt_rational(const Rational& q) {
  if (q.sign() < 0) throw NegativeInput("sqrt of negative rational " + q.pretty());
  if (q.is_zero()) return QuadExt();
  detail::i128 prod = static_cast<detail::i128>(q.num()) * q.den();
  if (!detail::fits64(prod)) throw OverflowError("sqrt_rational operand too large");
  auto [s, d] = squarefree_decompose(static_cast<std::int64_t>(prod));
  return QuadExt(Rational(0), Rational(s, q.den()), d);
}

/// Square root of a non-negative element of Q(sqrt d) inside the same field
/// (or, for rational input, inside Q(sqrt d') for the appropriate d').
/// Returns nullopt when the root does not denest.
inline std::optional<QuadExt> sqrt_quad(const QuadExt& x) {
  if (x.sign() < 0) throw NegativeInput("sqrt of negative value " + x.pretty());
  if (x.is_rational()) return sqrt_rational(x.a());
  // (u + v sqrt d)^2 = a + b sqrt d  <=>  u^2 + v^2 d = a, 2uv = b
  auto disc = exact_rational_sqrt(x.norm());
  if (!disc) return std::nullopt;
  for (const Rational& cand : {(x.a() + *disc) / Rational(2), (x.a() - *disc) / Rational(2)}) {
    if (cand.sign() <= 0) continue;
    auto u = exact_rational_sqrt(cand);
    if (!u) continue;
    Rational v = x.b() / (Rational(2) * *u);
    QuadExt root(*u, v, x.d());
    if (root.sign() < 0) root = -root;
    if (root * root == x) return root;
  }
  return std::nullopt;
}

/// re + i*im over Q(sqrt d); both parts share the radicand.
class ComplexQuad {
 public:
  ComplexQuad() = default;
  ComplexQuad(QuadExt re) : re_(std::move(re)) {}  // NOLINT(implicit)
  ComplexQuad(Rational re) : re_(re) {}  // NOLINT(implicit)
  ComplexQuad(std::int64_t re) : re_(re) {}  // NOLINT(implicit)
  ComplexQuad(QuadExt re, QuadExt im) : re_(std::move(re)), im_(std::move(im)) {
    QuadExt::common_radicand(re_, im_);
  }

  [[nodiscard]] const QuadExt& re() const { return re_; }
  [[nodiscard]] const QuadExt& im() const { return im_; }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] std::int64_t radicand() const { return QuadExt::common_radicand(re_, im_); }

  ComplexQuad operator-() const { return {-re_, -im_}; }
  [[nodiscard]] ComplexQuad conjugate() const { return {re_, -im_}; }

  friend ComplexQuad operator+(const ComplexQuad& x, const ComplexQuad& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend ComplexQuad operator-(const ComplexQuad& x, const ComplexQuad& y) { return x + (-y); }
  friend ComplexQuad operator*(const ComplexQuad& x, const ComplexQuad& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  ComplexQuad& operator+=(const ComplexQuad& y) { return *this = *this + y; }
  ComplexQuad& operator-=(const ComplexQuad& y) { return *this = *this - y; }
  ComplexQuad& operator*=(const ComplexQuad& y) { return *this = *this * y; }

  friend bool operator==(const ComplexQuad&, const ComplexQuad&) = default;

  [[nodiscard]] std::string pretty() const {
    auto imag = [](const QuadExt& v) -> std::string {
      if (v == QuadExt(1)) return "i";
      return (v.is_rational() ? v.pretty() : "(" + v.pretty() + ")") + "*i";
    };
    if (is_real()) return re_.pretty();
    if (re_.is_zero()) return im_ == QuadExt(-1) ? "-i" : imag(im_);
    if (im_.is_rational() && im_.sign() < 0) return re_.pretty() + " - " + imag(-im_);
    return re_.pretty() + " + " + imag(im_);
  }

 private:
  QuadExt re_{};
  QuadExt im_{};
};

inline std::ostream& operator<<(std::ostream& os, const ComplexQuad& z) { return os << z.pretty(); }

}  // namespace ruelle
