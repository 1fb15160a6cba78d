#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "quadric/quotient.hpp"

namespace quadric {

/// Polynomial R(X1, X2) in two formal variables, used to form expressions
/// R(f1, f2) in a pair of coordinate-ring elements.
class BivarPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BivarPoly() = default;
  BivarPoly(const Scalar& c);  // NOLINT
  static BivarPoly monomial(unsigned i, unsigned j, const Scalar& c = Scalar(1));
  static BivarPoly X1() { return monomial(1, 0); }
  static BivarPoly X2() { return monomial(0, 1); }

  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(unsigned i, unsigned j) const;
  unsigned degree_x1() const;
  unsigned degree_x2() const;

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const Scalar& c, const BivarPoly& a);
  BivarPoly pow(unsigned n) const;
  /// d/dX2.
  BivarPoly derivative_x2() const;

  /// R(f1, f2) in the coordinate ring.
  CoordClass evaluate(const CoordClass& f1, const CoordClass& f2) const;
  /// R(f1, f2) in the graded cone C[x]/(q).
  GradedClass evaluate(const GradedClass& f1, const GradedClass& f2) const;
  /// R(p1, p2) as a polynomial in x1..x4.
  Polynomial evaluate(const Polynomial& p1, const Polynomial& p2) const;
  /// R(S1(X1, X2), S2(X1, X2)).
  BivarPoly substitute(const BivarPoly& s1, const BivarPoly& s2) const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Descending exponent order, e.g. `X1^2*X2 - 3*X2`.
  std::string to_string() const;

 private:
  void add_term(Exponents e, const Scalar& c);
  std::map<Exponents, Scalar> terms_;
};

/// H = X1^s1 - lambda X2^s2 generating the relations between two
/// algebraically dependent leading classes.
struct LeadingRelation {
  unsigned s1 = 1;
  unsigned s2 = 1;
  Scalar lambda{1};

  BivarPoly polynomial() const;
  friend bool operator==(const LeadingRelation&, const LeadingRelation&) = default;
};

struct ParachuteReport {
  TriDegree d1;
  TriDegree d2;
  std::array<TriDegree, 4> jk_degrees;
  TriDegree max_jk;
  /// d1 + d2 - max_k deg j_k; may have negative entries in principle.
  Tri nabla;
};

struct GenericDegree {
  TriDegree ged;
  BivarPoly gen;
};

/// nf(j_C4(q, f1, f2, f3)): the Jacobian determinant of (q, f1, f2, f3),
/// well defined on the coordinate ring.
CoordClass pseudo_jacobian(const CoordClass& f1, const CoordClass& f2, const CoordClass& f3);
/// j_k(f1, f2) = j(x_k, f1, f2), k in 1..4.
CoordClass pseudo_jacobian_k(int k, const CoordClass& f1, const CoordClass& f2);

/// Throws DependentInputs when all four j_k(f1, f2) vanish.
ParachuteReport parachute(const CoordClass& f1, const CoordClass& f2);

/// One-sided independence test: true if some j_k(f1, f2) is nonzero at one
/// of a few fixed rational points of the quadric. A false result proves
/// nothing; parachute() decides exactly.
bool independent_at_points(const CoordClass& f1, const CoordClass& f2);

/// ged with ged X1 = d1, ged X2 = d2, and the top-ged part of R.
/// Throws ZeroInput for R = 0 or -inf degrees.
GenericDegree generic_degree(const BivarPoly& R, const TriDegree& d1, const TriDegree& d2);

/// Binomial relation (f1^w)^s1 = lambda (f2^w)^s2 in C[x]/(q) with s1, s2
/// coprime, if any. Throws ZeroInput on zero input and InvariantError on a
/// constant one.
std::optional<LeadingRelation> find_leading_relation(const CoordClass& f1, const CoordClass& f2);

/// Largest n with H^n | S (S nonzero).
unsigned relation_order(const BivarPoly& S, const LeadingRelation& relation);

/// f1^w in C[f2^w]: the leading relation exists with s1 = 1.
bool leading_in_univariate_algebra(const CoordClass& f1, const CoordClass& f2);

/// Instance check of the parachute chain for a caller-supplied n (the
/// H-adic order of the generic part of R):
///   d2 * deg_X2 R - n * nabla < deg R(f1, f2)      (non-strict when n = 0)
///   n * s1 * d1 - n * nabla < deg R(f1, f2)        (when a relation exists, n >= 1)
bool check_parachute_chain(const CoordClass& f1, const CoordClass& f2, const BivarPoly& R, unsigned n);

/// deg(f2 R(f1, f2)) > deg f1.
bool check_minoration(const CoordClass& f1, const CoordClass& f2, const BivarPoly& R);

}  // namespace quadric
