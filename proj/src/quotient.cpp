#include "quadric/quotient.hpp"

#include <algorithm>
#include <vector>

#include "quadric/error.hpp"

namespace quadric {

namespace {

const Monomial kX1X4(1, 0, 0, 1);

std::vector<mpz_class> binomial_row(std::uint32_t k) {
  std::vector<mpz_class> row(k + 1);
  for (std::uint32_t j = 0; j <= k; ++j) mpz_bin_uiui(row[j].get_mpz_t(), k, j);
  return row;
}

/// Rewrites every x1^a x4^d factor with k = min(a, d) > 0 in one shot:
/// (x1x4)^k -> (x2x3 + shift)^k where shift is 1 for (q - 1) and 0 for (q).
Polynomial rewrite(const Polynomial& p, bool with_shift) {
  bool clean = std::none_of(p.terms().begin(), p.terms().end(), [](const Term& t) {
    return t.monomial.e[0] > 0 && t.monomial.e[3] > 0;
  });
  if (clean) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const std::uint32_t k = std::min(t.monomial.e[0], t.monomial.e[3]);
    if (k == 0) {
      out.push_back(t);
      continue;
    }
    Monomial base = t.monomial;
    base.e[0] -= k;
    base.e[3] -= k;
    if (!with_shift) {
      base.e[1] += k;
      base.e[2] += k;
      out.push_back(Term{base, t.coeff});
      continue;
    }
    const auto row = binomial_row(k);
    for (std::uint32_t j = 0; j <= k; ++j) {
      Monomial m = base;
      m.e[1] += j;
      m.e[2] += j;
      out.push_back(Term{m, t.coeff * Scalar(mpq_class(row[j]))});
    }
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

CoordClass::CoordClass(const Polynomial& p) : rep_(rewrite(p, true)) {}

CoordClass operator+(const CoordClass& a, const CoordClass& b) {
  return CoordClass(a.rep_ + b.rep_, CoordClass::Trusted{});
}
CoordClass operator-(const CoordClass& a, const CoordClass& b) {
  return CoordClass(a.rep_ - b.rep_, CoordClass::Trusted{});
}
CoordClass operator*(const CoordClass& a, const CoordClass& b) { return CoordClass(a.rep_ * b.rep_); }
CoordClass operator*(const Scalar& c, const CoordClass& a) {
  return CoordClass(c * a.rep_, CoordClass::Trusted{});
}
CoordClass CoordClass::operator-() const { return CoordClass(-rep_, Trusted{}); }

CoordClass CoordClass::pow(unsigned n) const {
  CoordClass result(Polynomial(1));
  CoordClass base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

GradedClass::GradedClass(const Polynomial& p) : rep_(rewrite(p, false)) {}

GradedClass operator*(const GradedClass& a, const GradedClass& b) { return GradedClass(a.rep_ * b.rep_); }
GradedClass operator-(const GradedClass& a, const GradedClass& b) { return GradedClass(a.rep_ - b.rep_); }
GradedClass operator*(const Scalar& c, const GradedClass& a) { return GradedClass(c * a.rep_); }

GradedClass GradedClass::pow(unsigned n) const {
  GradedClass result(Polynomial(1));
  GradedClass base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const CoordClass& c) { return os << c.rep(); }
std::ostream& operator<<(std::ostream& os, const GradedClass& c) { return os << c.rep(); }

CoordClass nf_coord(const Polynomial& p) { return CoordClass(p); }
GradedClass nf_graded(const Polynomial& p) { return GradedClass(p); }

TriDegree deg_class(const CoordClass& f) { return weighted_degree(f.rep()); }

GradedClass leading_class(const CoordClass& f) {
  if (f.is_zero()) throw ZeroInput("leading class of the zero class");
  return nf_graded(leading_part(f.rep()));
}

std::optional<Polynomial> divide_by_q(const Polynomial& p) {
  const Polynomial& q = determinant_form();
  Polynomial remainder = p;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& lead = remainder.leading_term();
    if (!kX1X4.divides(lead.monomial)) return std::nullopt;
    Term t{lead.monomial / kX1X4, lead.coeff};
    remainder = remainder - Polynomial(t.monomial, t.coeff) * q;
    quotient.push_back(std::move(t));
  }
  return Polynomial::from_terms(std::move(quotient));
}

bool is_good_representative(const Polynomial& p) {
  if (p.is_zero()) return true;
  return !divide_by_q(leading_part(p)).has_value();
}

}  // namespace quadric
