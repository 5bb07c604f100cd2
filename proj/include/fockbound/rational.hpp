#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace fockbound {

// Exact rational arithmetic on 64-bit words. Intermediates go through
// 128-bit integers; results that do not fit back into 64 bits throw
// instead of wrapping, so a verdict can never be silently corrupted.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Scalar of the form r * sqrt(k) with r rational and k a positive squarefree
// integer. This is closed under the products arising from creation
// coefficients; sums are only defined when the radicands agree.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational r) : coeff_(r) {}
  ExactScalar(Rational r, std::int64_t radicand) : coeff_(r) {
    if (radicand <= 0) throw std::domain_error("sqrt of non-positive radicand");
    extract_square(radicand);
    if (coeff_.is_zero()) radicand_ = 1;
  }

  static ExactScalar sqrt_of(std::int64_t k) { return ExactScalar(Rational(1), k); }

  const Rational& coeff() const { return coeff_; }
  std::int64_t radicand() const { return radicand_; }
  bool is_zero() const { return coeff_.is_zero(); }

  ExactScalar operator-() const {
    ExactScalar s = *this;
    s.coeff_ = -s.coeff_;
    return s;
  }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar s;
    s.coeff_ = a.coeff_ * b.coeff_;
    if (s.coeff_.is_zero()) return s;
    s.extract_square(mul_radicand(a.radicand_, b.radicand_));
    return s;
  }

  // Defined only when radicands match (or one side is zero).
  std::optional<ExactScalar> try_add(const ExactScalar& b) const {
    if (is_zero()) return b;
    if (b.is_zero()) return *this;
    if (radicand_ != b.radicand_) return std::nullopt;
    ExactScalar s;
    s.coeff_ = coeff_ + b.coeff_;
    s.radicand_ = s.coeff_.is_zero() ? 1 : radicand_;
    return s;
  }

  // (r*sqrt(k))^2 = r^2 * k, always rational.
  Rational square() const { return coeff_ * coeff_ * Rational(radicand_); }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  double to_double() const {
    double v = coeff_.to_double();
    if (radicand_ != 1) v *= std::sqrt(static_cast<double>(radicand_));
    return v;
  }

  std::string to_string() const {
    if (radicand_ == 1) return coeff_.to_string();
    return coeff_.to_string() + "*sqrt(" + std::to_string(radicand_) + ")";
  }

 private:
  static std::int64_t mul_radicand(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX) throw std::overflow_error("radicand exceeds 64-bit range");
    return static_cast<std::int64_t>(p);
  }

  // Pull the largest square factor out of the radicand into the coefficient.
  void extract_square(std::int64_t k) {
    std::int64_t outside = 1;
    for (std::int64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
      while (k % (p * p) == 0) {
        k /= p * p;
        outside *= p;
      }
    }
    if (outside != 1) coeff_ = coeff_ * Rational(outside);
    radicand_ = k;
  }

  Rational coeff_;
  std::int64_t radicand_ = 1;
};

}  // namespace fockbound
