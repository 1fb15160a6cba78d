#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace quadric {

/// Exact Gaussian rational re + im*i. All arithmetic is exact; zero is
/// represented canonically (both parts zero).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  /// num/den, canonicalized. Throws ZeroInput when den == 0.
  static Scalar rational(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Multiplicative inverse; throws ZeroInput on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Arbitrary but fixed total order (re first, then im); used only for
  /// deterministic tie-breaking.
  friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

  /// Canonical text: `a`, `a/b`, `a+b*i`, `b*i`, `i`, `-i`.
  std::string to_string() const;

  Scalar pow(unsigned n) const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Square root inside Q(i) when one exists.
std::optional<Scalar> exact_sqrt(const Scalar& s);

}  // namespace quadric
