#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quadric/scalar.hpp"
#include "quadric/tridegree.hpp"

namespace quadric {

/// x1^e[0] x2^e[1] x3^e[2] x4^e[3].
struct Monomial {
  std::array<std::uint32_t, 4> e{0, 0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d)
      : e{a, b, c, d} {}

  static constexpr Monomial variable(int index) {
    Monomial m;
    m.e[static_cast<std::size_t>(index - 1)] = 1;
    return m;
  }

  /// Weighted degree: exponent row vector times the weight matrix
  /// rows (1,0,0), (0,1,0), (1,0,1), (0,1,1).
  constexpr Tri weight() const {
    return Tri(e[0] + e[2], e[1] + e[3], e[2] + e[3]);
  }
  constexpr std::uint32_t total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
  constexpr bool is_one() const { return total_degree() == 0; }
  constexpr bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2] && e[3] <= o.e[3];
  }

  friend constexpr Monomial operator*(Monomial a, const Monomial& b) {
    for (std::size_t k = 0; k < 4; ++k) a.e[k] += b.e[k];
    return a;
  }
  /// Requires b | a.
  friend constexpr Monomial operator/(Monomial a, const Monomial& b) {
    for (std::size_t k = 0; k < 4; ++k) a.e[k] -= b.e[k];
    return a;
  }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  /// Storage order: weighted graded-lex first, pure lex x1 > x2 > x3 > x4
  /// as tie-break. In particular x1x4 > x2x3.
  friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    return a.e <=> b.e;
  }

  std::uint64_t pack() const {
    return static_cast<std::uint64_t>(e[0]) | (static_cast<std::uint64_t>(e[1]) << 16U) |
           (static_cast<std::uint64_t>(e[2]) << 32U) | (static_cast<std::uint64_t>(e[3]) << 48U);
  }
  static Monomial unpack(std::uint64_t k) {
    return Monomial(static_cast<std::uint32_t>(k & 0xffffU),
                    static_cast<std::uint32_t>((k >> 16U) & 0xffffU),
                    static_cast<std::uint32_t>((k >> 32U) & 0xffffU),
                    static_cast<std::uint32_t>((k >> 48U) & 0xffffU));
  }

  /// `x1^2*x4`, or `1` for the unit monomial.
  std::string to_string() const;
};

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Sparse polynomial in x1..x4 over Q(i). Terms are kept sorted in
/// descending monomial order with no zero coefficients; the zero polynomial
/// has no terms. Values are immutable in practice: every operation returns
/// a fresh polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Scalar(c)) {}  // NOLINT
  Polynomial(const Scalar& c);                   // NOLINT
  Polynomial(const Monomial& m, const Scalar& c = Scalar(1));

  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(std::vector<Term> terms);
  static Polynomial variable(int index) { return Polynomial(Monomial::variable(index)); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Constant coefficient (zero when absent).
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  /// Largest term in storage order. Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }

  /// Ordinary total degree; -1 for zero.
  long total_degree() const;
  /// Bit k-1 set when x_k occurs.
  unsigned variable_mask() const;
  bool uses_only(std::initializer_list<int> vars) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text in the shared grammar, e.g. `x1*x4 - x2*x3`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// The determinant form x1x4 - x2x3.
const Polynomial& determinant_form();

enum class RingOp { add, sub, mul, scalar_mul };
Polynomial ring_arith(const Polynomial& p, const Polynomial& r, RingOp op,
                      const Scalar& c = Scalar(1));

/// Max over monomials of the weighted degree; -inf for zero.
TriDegree weighted_degree(const Polynomial& p);
/// Sum of the terms of top weighted degree. Throws ZeroInput on zero.
Polynomial leading_part(const Polynomial& p);
/// d p / d x_index, index in 1..4.
Polynomial partial_derivative(const Polynomial& p, int index);
/// det(d f_i / d x_j) over the 4x4 Jacobian matrix.
Polynomial jacobian4(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3,
                     const Polynomial& f4);
/// p(g1, g2, g3, g4), fully expanded.
Polynomial substitute(const Polynomial& p, const std::array<Polynomial, 4>& g);

}  // namespace quadric
