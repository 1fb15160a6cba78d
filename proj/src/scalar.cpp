#include "quadric/scalar.hpp"

#include "quadric/error.hpp"

namespace quadric {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ZeroInput("rational literal with zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroInput("division by zero scalar");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar Scalar::pow(unsigned n) const {
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) > 0) return re_.get_str() + "+" + im_part;
  return re_.get_str() + im_part;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (sgn(v) < 0) return std::nullopt;
  const mpz_class& num = v.get_num();
  const mpz_class& den = v.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (s.is_zero()) return Scalar(0);
  if (s.is_real()) {
    if (sgn(s.re()) > 0) {
      if (auto r = rational_sqrt(s.re())) return Scalar(*r);
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-s.re())) return Scalar(mpq_class(0), *r);
    return std::nullopt;
  }
  // (x + y i)^2 = a + b i  =>  x^2 = (a + |s|)/2, y^2 = (|s| - a)/2, 2xy = b.
  auto modulus = rational_sqrt(s.re() * s.re() + s.im() * s.im());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((s.re() + *modulus) / 2);
  auto y = rational_sqrt((*modulus - s.re()) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = sgn(s.im()) < 0 ? mpq_class(-*y) : *y;
  Scalar root(*x, yy);
  if (!(root * root == s)) return std::nullopt;
  return root;
}

}  // namespace quadric
