#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadric/polynomial.hpp"
#include "quadric/quotient.hpp"

namespace quadric {

/// Plain 2x2 matrix over Q(i).
struct Mat2 {
  Scalar a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return Mat2{}; }
  static Mat2 diag(const Scalar& x, const Scalar& y) { return Mat2{x, 0, 0, y}; }

  Scalar det() const { return a * d - b * c; }
  Mat2 inverse() const;
  Mat2 transposed() const { return Mat2{a, c, b, d}; }
  bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Scalar& s, const Mat2& m) { return Mat2{s * m.a, s * m.b, s * m.c, s * m.d}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  /// `[[a,b],[c,d]]`
  std::string to_string() const;
};

/// A matrix with determinant exactly 1.
class SL2Matrix {
 public:
  SL2Matrix() = default;
  /// Throws InvariantError unless ad - bc = 1.
  static SL2Matrix make(const Mat2& m);
  static SL2Matrix make(Scalar a, Scalar b, Scalar c, Scalar d) {
    return make(Mat2{std::move(a), std::move(b), std::move(c), std::move(d)});
  }

  const Mat2& mat() const { return m_; }
  SL2Matrix inverse() const { return SL2Matrix(m_.inverse()); }
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;

 private:
  explicit SL2Matrix(const Mat2& m) : m_(m) {}
  Mat2 m_;
};

/// The four families of elementary automorphisms. Each fixes two matrix
/// entries up to scalars and shifts the other two by multiples of h:
///   E34: (x1/a, x2/b, b x3 + b x1 h, a x4 + a x2 h),  h in C[x1, x2]
///   E12: (a x1 + a x3 h, b x2 + b x4 h, x3/b, x4/a),  h in C[x3, x4]
///   E24: (x1/a, b x2 + b x1 h, x3/b, a x4 + a x3 h),  h in C[x1, x3]
///   E13: (a x1 + a x2 h, x2/b, b x3 + b x4 h, x4/a),  h in C[x2, x4]
enum class Family { E34, E12, E24, E13 };

std::string family_name(Family f);
/// The two variables h may depend on, e.g. {2, 4} for E13.
std::array<int, 2> family_variables(Family f);

class ElementaryAutom {
 public:
  /// Throws InvariantError if a or b is zero or h uses a forbidden variable.
  static ElementaryAutom make(Family family, Scalar a, Scalar b, Polynomial h);

  Family family() const { return family_; }
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Polynomial& h() const { return h_; }

  std::array<Polynomial, 4> quadruple() const;
  /// (1/a, 1/b, -ab h(scaled variables)): the exact inverse letter.
  ElementaryAutom inverse() const;

  friend bool operator==(const ElementaryAutom&, const ElementaryAutom&) = default;

  /// `E13(a=1,b=1,h=x2^2)`
  std::string to_string() const;

 private:
  ElementaryAutom(Family f, Scalar a, Scalar b, Polynomial h)
      : family_(f), a_(std::move(a)), b_(std::move(b)), h_(std::move(h)) {}
  Family family_;
  Scalar a_;
  Scalar b_;
  Polynomial h_;
};

/// Element of O4: X -> S(left * Y * right) where Y is X or its transpose
/// and S(M) = (s m11, m12, m21, m22 / s) with s = scale. The scale factor
/// is 1 except for elements whose SL2 x SL2 factors would need a square
/// root outside Q(i); S itself is the elementary letter E13(a=s, b=1, h=0).
class OrthogonalAutom {
 public:
  OrthogonalAutom() = default;
  /// Throws ConstructionError if the induced linear map does not preserve q.
  static OrthogonalAutom make(const SL2Matrix& left, const SL2Matrix& right, bool transpose,
                              const Scalar& scale = Scalar(1));
  /// Normalizes X -> left * Y * right with det(left) det(right) = 1 into
  /// SL2 factors (plus a scale when det(left) is not a square in Q(i)).
  static OrthogonalAutom from_factors(const Mat2& left, const Mat2& right, bool transpose);
  static OrthogonalAutom transposition() { return make({}, {}, true); }

  const SL2Matrix& left() const { return left_; }
  const SL2Matrix& right() const { return right_; }
  bool transpose() const { return transpose_; }
  const Scalar& scale() const { return scale_; }

  std::array<Polynomial, 4> linear_quadruple() const;
  OrthogonalAutom inverse() const;

  friend bool operator==(const OrthogonalAutom&, const OrthogonalAutom&) = default;

  /// Word text, e.g. `L[[1,0],[1,1]] * R[[1,-1],[0,1]] * T`.
  std::string to_string() const;

 private:
  SL2Matrix left_;
  SL2Matrix right_;
  bool transpose_ = false;
  Scalar scale_{1};
};

/// Automorphism of the quadric, stored as four normal-formed coordinate
/// classes. Composition follows maps: (F o G)(x) = F(G(x)), i.e. the
/// coordinates of F are evaluated at the coordinates of G.
class Autom {
 public:
  /// Throws NotAnAutomorphism if nf(f1 f4 - f2 f3) != 1 or a coordinate is
  /// constant.
  static Autom make(const std::array<Polynomial, 4>& f);
  static Autom make(const std::array<CoordClass, 4>& f);
  static const Autom& identity();

  const std::array<CoordClass, 4>& coords() const { return f_; }
  /// Coordinate f_index, index in 1..4.
  const CoordClass& operator[](int index) const { return f_[static_cast<std::size_t>(index - 1)]; }
  std::array<Polynomial, 4> reps() const;

  friend bool operator==(const Autom&, const Autom&) = default;

  /// `(f1, f2, f3, f4)`
  std::string to_string() const;

 private:
  explicit Autom(std::array<CoordClass, 4> f) : f_(std::move(f)) {}
  friend Autom compose(const Autom& F, const Autom& G);
  std::array<CoordClass, 4> f_;
};

using Letter = std::variant<ElementaryAutom, OrthogonalAutom>;

/// Sequence of generators; its value is letters[0] o letters[1] o ... .
struct TameWord {
  std::vector<Letter> letters;

  /// Letters reversed and individually inverted.
  TameWord inverse() const;
  friend bool operator==(const TameWord&, const TameWord&) = default;
  /// Letters joined by ` * `; the empty word prints as `L[[1,0],[0,1]]`.
  std::string to_string() const;
};

std::string letter_to_string(const Letter& letter);

Autom elem_to_autom(const ElementaryAutom& e);
Autom orth_to_autom(const OrthogonalAutom& o);
Autom letter_to_autom(const Letter& letter);
Autom compose(const Autom& F, const Autom& G);
Autom word_to_autom(const TameWord& w);

/// Sum of the four coordinate degrees.
TriDegree degree_aut(const Autom& F);
/// True iff F o G and G o F are both the identity.
bool verify_automorphism(const Autom& F, const Autom& G);

/// exp(k D) for k in the kernel of the derivation
/// D x1 = -x2, D x2 = 0, D x3 = x1 - x4, D x4 = x2, i.e. k in C[x2, x1 + x4]:
///   (x1 - x2 k, x2, x3 + (x1 - x4) k - x2 k^2, x4 + x2 k).
Autom lnd_exponential(const Polynomial& kernel_element);
/// exp((x1 + x4)^n D). Throws InvariantError for n = 0.
Autom sigma_n(unsigned n);
/// exp(-(x1 + x4)^n D), the inverse of sigma_n.
Autom sigma_n_inverse(unsigned n);
/// The length-2 word E34(h) * E13(-h) realizing exp(h(x2) D).
/// Throws InvariantError unless h only involves x2.
TameWord exp_trace_lnd_word(const Polynomial& h);
Autom exp_trace_lnd(const Polynomial& h);

/// Recognizes an element of O4: linear coordinates and q o F = q.
std::optional<OrthogonalAutom> as_orthogonal(const Autom& F);
bool is_orthogonal(const Autom& F);

/// deg f1 + deg f4 == deg f2 + deg f3.
bool half_degree_identity(const Autom& F);

/// (a f1, f2 / b, b f3, f4 / a).
Autom scale_coordinates(const Autom& F, const Scalar& a, const Scalar& b);
/// F * diag(a, 1/a) as a coordinate matrix.
Autom right_diagonal(const Autom& F, const Scalar& a);
/// F * [[0, a], [-1/a, 0]] as a coordinate matrix.
Autom right_antidiagonal(const Autom& F, const Scalar& a);

}  // namespace quadric
