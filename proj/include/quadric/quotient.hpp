#pragma once

#include <optional>
#include <ostream>

#include "quadric/polynomial.hpp"

namespace quadric {

/// Element of C[x1..x4]/(q - 1), the coordinate ring of the quadric
/// {x1x4 - x2x3 = 1}. The representative is the normal form under
/// x1x4 -> x2x3 + 1, so it contains no monomial divisible by x1x4 and is a
/// good representative of its class.
class CoordClass {
 public:
  CoordClass() = default;
  /// Reduces p modulo (q - 1).
  explicit CoordClass(const Polynomial& p);
  static CoordClass variable(int index) { return CoordClass(Polynomial::variable(index)); }

  const Polynomial& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_constant() const { return rep_.is_constant(); }

  friend CoordClass operator+(const CoordClass& a, const CoordClass& b);
  friend CoordClass operator-(const CoordClass& a, const CoordClass& b);
  friend CoordClass operator*(const CoordClass& a, const CoordClass& b);
  friend CoordClass operator*(const Scalar& c, const CoordClass& a);
  CoordClass operator-() const;
  CoordClass pow(unsigned n) const;

  friend bool operator==(const CoordClass& a, const CoordClass& b) { return a.rep_ == b.rep_; }

  std::string to_string() const { return rep_.to_string(); }

 private:
  struct Trusted {};
  CoordClass(Polynomial reduced, Trusted) : rep_(std::move(reduced)) {}
  Polynomial rep_;
};

/// Element of C[x1..x4]/(q), the graded cone where leading classes live.
/// Representative is reduced under x1x4 -> x2x3.
class GradedClass {
 public:
  GradedClass() = default;
  explicit GradedClass(const Polynomial& p);

  const Polynomial& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const Scalar& c, const GradedClass& a);
  GradedClass pow(unsigned n) const;

  friend bool operator==(const GradedClass& a, const GradedClass& b) { return a.rep_ == b.rep_; }

  std::string to_string() const { return rep_.to_string(); }

 private:
  Polynomial rep_;
};

std::ostream& operator<<(std::ostream& os, const CoordClass& c);
std::ostream& operator<<(std::ostream& os, const GradedClass& c);

CoordClass nf_coord(const Polynomial& p);
GradedClass nf_graded(const Polynomial& p);

/// deg of the class: the minimum of weighted_degree over all representatives,
/// attained by the normal form.
TriDegree deg_class(const CoordClass& f);
/// Leading part of a good representative, taken modulo (q). Throws ZeroInput.
GradedClass leading_class(const CoordClass& f);

/// Exact division by q. Returns the quotient when q | p.
std::optional<Polynomial> divide_by_q(const Polynomial& p);
/// True iff p = 0 or leading_part(p) is not divisible by q.
bool is_good_representative(const Polynomial& p);

}  // namespace quadric
