#include "quadric/autom.hpp"

#include <sstream>

#include "quadric/error.hpp"

namespace quadric {

namespace {

Polynomial x(int k) { return Polynomial::variable(k); }

/// Matrix of polynomials used to expand left * X * right.
struct PolyMat2 {
  Polynomial a, b, c, d;
};

PolyMat2 multiply(const Mat2& m, const PolyMat2& p) {
  return {m.a * p.a + m.b * p.c, m.a * p.b + m.b * p.d, m.c * p.a + m.d * p.c,
          m.c * p.b + m.d * p.d};
}

PolyMat2 multiply(const PolyMat2& p, const Mat2& m) {
  return {m.a * p.a + m.c * p.b, m.b * p.a + m.d * p.b, m.a * p.c + m.c * p.d,
          m.b * p.c + m.d * p.d};
}

bool is_canonically_negative(const Scalar& s) {
  return sgn(s.re()) < 0 || (sgn(s.re()) == 0 && sgn(s.im()) < 0);
}

}  // namespace

// --- Mat2 / SL2Matrix -------------------------------------------------------

Mat2 Mat2::inverse() const {
  const Scalar inv = det().inverse();
  return Mat2{inv * d, -(inv * b), -(inv * c), inv * a};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d};
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," + d.to_string() + "]]";
}

SL2Matrix SL2Matrix::make(const Mat2& m) {
  if (!m.det().is_one()) {
    throw InvariantError("matrix " + m.to_string() + " has determinant " + m.det().to_string() + ", expected 1");
  }
  return SL2Matrix(m);
}

// --- elementary letters ------------------------------------------------------

std::string family_name(Family f) {
  switch (f) {
    case Family::E34: return "E34";
    case Family::E12: return "E12";
    case Family::E24: return "E24";
    case Family::E13: return "E13";
  }
  throw InternalError("unknown family");
}

std::array<int, 2> family_variables(Family f) {
  switch (f) {
    case Family::E34: return {1, 2};
    case Family::E12: return {3, 4};
    case Family::E24: return {1, 3};
    case Family::E13: return {2, 4};
  }
  throw InternalError("unknown family");
}

ElementaryAutom ElementaryAutom::make(Family family, Scalar a, Scalar b, Polynomial h) {
  if (a.is_zero() || b.is_zero()) throw InvariantError(family_name(family) + ": scalars a and b must be nonzero");
  const auto vars = family_variables(family);
  if (!h.uses_only({vars[0], vars[1]})) {
    throw InvariantError(family_name(family) + ": h must be a polynomial in x" + std::to_string(vars[0]) +
                         " and x" + std::to_string(vars[1]));
  }
  return ElementaryAutom(family, std::move(a), std::move(b), std::move(h));
}

std::array<Polynomial, 4> ElementaryAutom::quadruple() const {
  const Scalar ia = a_.inverse();
  const Scalar ib = b_.inverse();
  switch (family_) {
    case Family::E34:
      return {ia * x(1), ib * x(2), b_ * (x(3) + x(1) * h_), a_ * (x(4) + x(2) * h_)};
    case Family::E12:
      return {a_ * (x(1) + x(3) * h_), b_ * (x(2) + x(4) * h_), ib * x(3), ia * x(4)};
    case Family::E24:
      return {ia * x(1), b_ * (x(2) + x(1) * h_), ib * x(3), a_ * (x(4) + x(3) * h_)};
    case Family::E13:
      return {a_ * (x(1) + x(2) * h_), ib * x(2), b_ * (x(3) + x(4) * h_), ia * x(4)};
  }
  throw InternalError("unknown family");
}

ElementaryAutom ElementaryAutom::inverse() const {
  // The variable that the letter divides by a (resp. b) gets multiplied by
  // a (resp. b) inside h.
  std::array<Polynomial, 4> scaled{x(1), x(2), x(3), x(4)};
  switch (family_) {
    case Family::E34:
      scaled[0] = a_ * x(1);
      scaled[1] = b_ * x(2);
      break;
    case Family::E12:
      scaled[2] = b_ * x(3);
      scaled[3] = a_ * x(4);
      break;
    case Family::E24:
      scaled[0] = a_ * x(1);
      scaled[2] = b_ * x(3);
      break;
    case Family::E13:
      scaled[1] = b_ * x(2);
      scaled[3] = a_ * x(4);
      break;
  }
  Polynomial h = -(a_ * b_) * substitute(h_, scaled);
  return ElementaryAutom(family_, a_.inverse(), b_.inverse(), std::move(h));
}

std::string ElementaryAutom::to_string() const {
  return family_name(family_) + "(a=" + a_.to_string() + ",b=" + b_.to_string() + ",h=" + h_.to_string() + ")";
}

// --- orthogonal letters ------------------------------------------------------

OrthogonalAutom OrthogonalAutom::make(const SL2Matrix& left, const SL2Matrix& right, bool transpose,
                                      const Scalar& scale) {
  if (scale.is_zero()) throw InvariantError("orthogonal scale must be nonzero");
  OrthogonalAutom o;
  o.left_ = left;
  o.right_ = right;
  o.transpose_ = transpose;
  o.scale_ = scale;
  const auto lin = o.linear_quadruple();
  if (!(substitute(determinant_form(), lin) == determinant_form())) {
    throw ConstructionError("linear map does not preserve x1*x4 - x2*x3");
  }
  return o;
}

OrthogonalAutom OrthogonalAutom::from_factors(const Mat2& left, const Mat2& right, bool transpose) {
  const Scalar delta = left.det();
  if (!(delta * right.det()).is_one()) {
    throw InvariantError("factors must satisfy det(left) * det(right) = 1");
  }
  Mat2 l;
  Mat2 r;
  Scalar scale(1);
  if (auto root = exact_sqrt(delta)) {
    l = root->inverse() * left;
    r = *root * right;
  } else {
    scale = delta;
    l = Mat2::diag(delta.inverse(), 1) * left;
    r = right * Mat2::diag(1, delta);
  }
  for (const Scalar* s : {&l.a, &l.b, &l.c, &l.d}) {
    if (s->is_zero()) continue;
    if (is_canonically_negative(*s)) {
      l = Scalar(-1) * l;
      r = Scalar(-1) * r;
    }
    break;
  }
  return make(SL2Matrix::make(l), SL2Matrix::make(r), transpose, scale);
}

std::array<Polynomial, 4> OrthogonalAutom::linear_quadruple() const {
  PolyMat2 y = transpose_ ? PolyMat2{x(1), x(3), x(2), x(4)} : PolyMat2{x(1), x(2), x(3), x(4)};
  PolyMat2 m = multiply(multiply(left_.mat(), y), right_.mat());
  return {scale_ * m.a, m.b, m.c, scale_.inverse() * m.d};
}

OrthogonalAutom OrthogonalAutom::inverse() const {
  // X = S^-1 applied first: diag(1/s, 1) X diag(1, s); then undo the two
  // sided multiplication, then the transpose.
  const Mat2 pre_l = left_.mat().inverse() * Mat2::diag(scale_.inverse(), 1);
  const Mat2 pre_r = Mat2::diag(1, scale_) * right_.mat().inverse();
  if (!transpose_) return from_factors(pre_l, pre_r, false);
  return from_factors(pre_r.transposed(), pre_l.transposed(), true);
}

std::string OrthogonalAutom::to_string() const {
  std::vector<std::string> parts;
  if (!scale_.is_one()) parts.push_back("E13(a=" + scale_.to_string() + ",b=1,h=0)");
  if (!left_.mat().is_identity()) parts.push_back("L" + left_.mat().to_string());
  if (!right_.mat().is_identity()) parts.push_back("R" + right_.mat().to_string());
  if (transpose_) parts.push_back("T");
  if (parts.empty()) return "L" + Mat2::identity().to_string();
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " * " + parts[k];
  return out;
}

// --- automorphisms -----------------------------------------------------------

Autom Autom::make(const std::array<Polynomial, 4>& f) {
  return make(std::array<CoordClass, 4>{nf_coord(f[0]), nf_coord(f[1]), nf_coord(f[2]), nf_coord(f[3])});
}

Autom Autom::make(const std::array<CoordClass, 4>& f) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (f[k].is_constant()) {
      throw NotAnAutomorphism("coordinate f" + std::to_string(k + 1) + " is constant");
    }
  }
  const CoordClass det = f[0] * f[3] - f[1] * f[2];
  if (!(det == nf_coord(Polynomial(1)))) {
    throw NotAnAutomorphism("f1*f4 - f2*f3 reduces to " + det.to_string() + ", not 1");
  }
  return Autom(f);
}

const Autom& Autom::identity() {
  static const Autom id = Autom::make(std::array<Polynomial, 4>{x(1), x(2), x(3), x(4)});
  return id;
}

std::array<Polynomial, 4> Autom::reps() const { return {f_[0].rep(), f_[1].rep(), f_[2].rep(), f_[3].rep()}; }

std::string Autom::to_string() const {
  return "(" + f_[0].to_string() + ", " + f_[1].to_string() + ", " + f_[2].to_string() + ", " +
         f_[3].to_string() + ")";
}

TameWord TameWord::inverse() const {
  TameWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    std::visit([&w](const auto& l) { w.letters.emplace_back(l.inverse()); }, *it);
  }
  return w;
}

std::string letter_to_string(const Letter& letter) {
  return std::visit([](const auto& l) { return l.to_string(); }, letter);
}

std::string TameWord::to_string() const {
  if (letters.empty()) return "L" + Mat2::identity().to_string();
  std::string out = letter_to_string(letters[0]);
  for (std::size_t k = 1; k < letters.size(); ++k) out += " * " + letter_to_string(letters[k]);
  return out;
}

Autom elem_to_autom(const ElementaryAutom& e) { return Autom::make(e.quadruple()); }

Autom orth_to_autom(const OrthogonalAutom& o) { return Autom::make(o.linear_quadruple()); }

Autom letter_to_autom(const Letter& letter) {
  if (const auto* e = std::get_if<ElementaryAutom>(&letter)) return elem_to_autom(*e);
  return orth_to_autom(std::get<OrthogonalAutom>(letter));
}

Autom compose(const Autom& F, const Autom& G) {
  const auto g = G.reps();
  std::array<CoordClass, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = nf_coord(substitute(F.f_[k].rep(), g));
  return Autom(std::move(out));
}

Autom word_to_autom(const TameWord& w) {
  Autom acc = Autom::identity();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) acc = compose(letter_to_autom(*it), acc);
  return acc;
}

TriDegree degree_aut(const Autom& F) {
  TriDegree sum(0, 0, 0);
  for (const auto& f : F.coords()) sum = sum + deg_class(f);
  return sum;
}

bool verify_automorphism(const Autom& F, const Autom& G) {
  return compose(F, G) == Autom::identity() && compose(G, F) == Autom::identity();
}

Autom lnd_exponential(const Polynomial& k) {
  return Autom::make(std::array<Polynomial, 4>{
      x(1) - x(2) * k,
      x(2),
      x(3) + (x(1) - x(4)) * k - x(2) * k * k,
      x(4) + x(2) * k,
  });
}

Autom sigma_n(unsigned n) {
  if (n == 0) throw InvariantError("sigma_n requires n >= 1");
  return lnd_exponential((x(1) + x(4)).pow(n));
}

Autom sigma_n_inverse(unsigned n) {
  if (n == 0) throw InvariantError("sigma_n requires n >= 1");
  return lnd_exponential(-(x(1) + x(4)).pow(n));
}

TameWord exp_trace_lnd_word(const Polynomial& h) {
  if (!h.uses_only({2})) throw InvariantError("exp_trace_lnd: h must be univariate in x2");
  TameWord w;
  w.letters.emplace_back(ElementaryAutom::make(Family::E34, 1, 1, h));
  w.letters.emplace_back(ElementaryAutom::make(Family::E13, 1, 1, -h));
  return w;
}

Autom exp_trace_lnd(const Polynomial& h) { return word_to_autom(exp_trace_lnd_word(h)); }

namespace {

/// Entry of the 4x4 coefficient matrix: coefficient of x(k+1) in f(r+1).
using Linear4 = std::array<std::array<Scalar, 4>, 4>;

std::optional<OrthogonalAutom> match_factors(const Linear4& A, bool transpose) {
  // Position (row, col) of the 2x2 matrix <-> index 2*row + col.
  // Untransposed: A[(r,c),(k,l)] = L[r][k] R[l][c].
  // Transposed:   A[(r,c),(l,k)] = L[r][k] R[l][c].
  auto B = [&](int r, int k, int l, int c) -> const Scalar& {
    const int out = 2 * r + c;
    const int in = transpose ? 2 * l + k : 2 * k + l;
    return A[static_cast<std::size_t>(out)][static_cast<std::size_t>(in)];
  };
  int r0 = -1, k0 = -1, l0 = -1, c0 = -1;
  for (int r = 0; r < 2 && r0 < 0; ++r)
    for (int k = 0; k < 2 && r0 < 0; ++k)
      for (int l = 0; l < 2 && r0 < 0; ++l)
        for (int c = 0; c < 2 && r0 < 0; ++c)
          if (!B(r, k, l, c).is_zero()) r0 = r, k0 = k, l0 = l, c0 = c;
  if (r0 < 0) return std::nullopt;
  Mat2 L{B(0, 0, l0, c0), B(0, 1, l0, c0), B(1, 0, l0, c0), B(1, 1, l0, c0)};
  const Scalar pivot = B(r0, k0, l0, c0).inverse();
  Mat2 R{pivot * B(r0, k0, 0, 0), pivot * B(r0, k0, 0, 1), pivot * B(r0, k0, 1, 0), pivot * B(r0, k0, 1, 1)};
  auto entry = [](const Mat2& m, int i, int j) -> const Scalar& {
    return i == 0 ? (j == 0 ? m.a : m.b) : (j == 0 ? m.c : m.d);
  };
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int c = 0; c < 2; ++c)
          if (!(B(r, k, l, c) == entry(L, r, k) * entry(R, l, c))) return std::nullopt;
  if (!(L.det() * R.det()).is_one()) return std::nullopt;
  return OrthogonalAutom::from_factors(L, R, transpose);
}

}  // namespace

std::optional<OrthogonalAutom> as_orthogonal(const Autom& F) {
  Linear4 A;
  for (std::size_t r = 0; r < 4; ++r) {
    const Polynomial& p = F.coords()[r].rep();
    if (p.total_degree() > 1 || !p.constant_term().is_zero()) return std::nullopt;
    for (std::size_t k = 0; k < 4; ++k) A[r][k] = p.coefficient(Monomial::variable(static_cast<int>(k + 1)));
  }
  if (!(substitute(determinant_form(), F.reps()) == determinant_form())) return std::nullopt;
  for (bool transpose : {false, true}) {
    if (auto o = match_factors(A, transpose)) {
      if (!(orth_to_autom(*o) == F)) throw InternalError("orthogonal factorization does not reproduce the map");
      return o;
    }
  }
  throw InternalError("q-preserving linear map without an SL2 x SL2 factorization");
}

bool is_orthogonal(const Autom& F) {
  for (const auto& f : F.coords()) {
    if (f.rep().total_degree() > 1) return false;
  }
  return substitute(determinant_form(), F.reps()) == determinant_form();
}

bool half_degree_identity(const Autom& F) {
  return deg_class(F[1]) + deg_class(F[4]) == deg_class(F[2]) + deg_class(F[3]);
}

Autom scale_coordinates(const Autom& F, const Scalar& a, const Scalar& b) {
  return Autom::make(std::array<CoordClass, 4>{a * F[1], b.inverse() * F[2], b * F[3], a.inverse() * F[4]});
}

Autom right_diagonal(const Autom& F, const Scalar& a) {
  return Autom::make(std::array<CoordClass, 4>{a * F[1], a.inverse() * F[2], a * F[3], a.inverse() * F[4]});
}

Autom right_antidiagonal(const Autom& F, const Scalar& a) {
  const Scalar ia = a.inverse();
  return Autom::make(std::array<CoordClass, 4>{-(ia * F[2]), a * F[1], -(ia * F[4]), a * F[3]});
}

}  // namespace quadric
