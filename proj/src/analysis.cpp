#include "quadric/analysis.hpp"

#include <numeric>
#include <vector>

#include "quadric/error.hpp"

namespace quadric {

// --- BivarPoly ---------------------------------------------------------------

BivarPoly::BivarPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

BivarPoly BivarPoly::monomial(unsigned i, unsigned j, const Scalar& c) {
  BivarPoly p;
  p.add_term({i, j}, c);
  return p;
}

void BivarPoly::add_term(Exponents e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar BivarPoly::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Scalar(0) : it->second;
}

unsigned BivarPoly::degree_x1() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned BivarPoly::degree_x2() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return r;
}

BivarPoly operator*(const Scalar& c, const BivarPoly& a) {
  BivarPoly r;
  for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
  return r;
}

BivarPoly BivarPoly::pow(unsigned n) const {
  BivarPoly r(Scalar(1));
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

BivarPoly BivarPoly::derivative_x2() const {
  BivarPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) r.add_term({e.first, e.second - 1}, c * Scalar(static_cast<long>(e.second)));
  }
  return r;
}

namespace {

template <typename Ring>
Ring evaluate_in(const std::map<BivarPoly::Exponents, Scalar>& terms, const Ring& f1, const Ring& f2,
                 const Ring& one) {
  unsigned max1 = 0, max2 = 0;
  for (const auto& [e, c] : terms) {
    max1 = std::max(max1, e.first);
    max2 = std::max(max2, e.second);
  }
  std::vector<Ring> p1{one}, p2{one};
  for (unsigned k = 1; k <= max1; ++k) p1.push_back(p1.back() * f1);
  for (unsigned k = 1; k <= max2; ++k) p2.push_back(p2.back() * f2);
  Ring sum;
  for (const auto& [e, c] : terms) sum = sum + c * (p1[e.first] * p2[e.second]);
  return sum;
}

}  // namespace

CoordClass BivarPoly::evaluate(const CoordClass& f1, const CoordClass& f2) const {
  return evaluate_in(terms_, f1, f2, nf_coord(Polynomial(1)));
}

Polynomial BivarPoly::evaluate(const Polynomial& p1, const Polynomial& p2) const {
  return evaluate_in(terms_, p1, p2, Polynomial(1));
}

BivarPoly BivarPoly::substitute(const BivarPoly& s1, const BivarPoly& s2) const {
  return evaluate_in(terms_, s1, s2, BivarPoly(Scalar(1)));
}

GradedClass BivarPoly::evaluate(const GradedClass& f1, const GradedClass& f2) const {
  return nf_graded(evaluate(f1.rep(), f2.rep()));
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Reuse the polynomial printer with X1 -> x1, X2 -> x2, then rename.
  std::vector<Term> terms;
  for (const auto& [e, c] : terms_) terms.push_back(Term{Monomial(e.first, e.second, 0, 0), c});
  std::string s = Polynomial::from_terms(std::move(terms)).to_string();
  for (char& ch : s) {
    if (ch == 'x') ch = 'X';
  }
  return s;
}

BivarPoly LeadingRelation::polynomial() const {
  return BivarPoly::monomial(s1, 0) - BivarPoly::monomial(0, s2, lambda);
}

// --- pseudo-Jacobians ----------------------------------------------------------

CoordClass pseudo_jacobian(const CoordClass& f1, const CoordClass& f2, const CoordClass& f3) {
  return nf_coord(jacobian4(determinant_form(), f1.rep(), f2.rep(), f3.rep()));
}

CoordClass pseudo_jacobian_k(int k, const CoordClass& f1, const CoordClass& f2) {
  if (k < 1 || k > 4) throw InvariantError("pseudo-Jacobian index must be in 1..4");
  return pseudo_jacobian(CoordClass::variable(k), f1, f2);
}

ParachuteReport parachute(const CoordClass& f1, const CoordClass& f2) {
  ParachuteReport r;
  r.d1 = deg_class(f1);
  r.d2 = deg_class(f2);
  for (int k = 1; k <= 4; ++k) {
    r.jk_degrees[static_cast<std::size_t>(k - 1)] = deg_class(pseudo_jacobian_k(k, f1, f2));
    r.max_jk = std::max(r.max_jk, r.jk_degrees[static_cast<std::size_t>(k - 1)]);
  }
  if (r.max_jk.is_minus_infinity()) {
    throw DependentInputs("all pseudo-Jacobians j_k(f1, f2) vanish");
  }
  r.nabla = r.d1.value() + r.d2.value() - r.max_jk.value();
  return r;
}

namespace {

using Point = std::array<Scalar, 4>;

/// Gradient of p at pt.
std::array<Scalar, 4> gradient_at(const Polynomial& p, const Point& pt) {
  std::array<std::vector<Scalar>, 4> powers;
  for (const Term& t : p.terms()) {
    for (std::size_t v = 0; v < 4; ++v) {
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(Scalar(1));
      while (pw.size() <= t.monomial.e[v]) pw.push_back(pw.back() * pt[v]);
    }
  }
  std::array<Scalar, 4> grad{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  for (const Term& t : p.terms()) {
    for (std::size_t v = 0; v < 4; ++v) {
      if (t.monomial.e[v] == 0) continue;
      Scalar value = t.coeff * Scalar(static_cast<long>(t.monomial.e[v]));
      for (std::size_t u = 0; u < 4; ++u) value *= powers[u][t.monomial.e[u] - (u == v ? 1 : 0)];
      grad[v] += value;
    }
  }
  return grad;
}

Scalar det3(const std::array<std::array<Scalar, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

bool independent_at_points(const CoordClass& f1, const CoordClass& f2) {
  static const std::array<Point, 3> points{{
      {Scalar(2), Scalar(3), Scalar(5), Scalar(8)},
      {Scalar(3), Scalar(-2), Scalar(7), Scalar::rational(-13, 3)},
      {Scalar(-5), Scalar::rational(1, 2), Scalar(4), Scalar::rational(-3, 5)},
  }};
  for (const Point& pt : points) {
    const std::array<Scalar, 4> gq{pt[3], -pt[2], -pt[1], pt[0]};
    const auto g1 = gradient_at(f1.rep(), pt);
    const auto g2 = gradient_at(f2.rep(), pt);
    // j_k is the 4x4 determinant with rows grad q, e_k, grad f1, grad f2;
    // expanding along e_k leaves a signed 3x3 minor.
    for (std::size_t k = 0; k < 4; ++k) {
      std::array<std::array<Scalar, 3>, 3> m;
      for (std::size_t c = 0, col = 0; c < 4; ++c) {
        if (c == k) continue;
        m[0][col] = gq[c];
        m[1][col] = g1[c];
        m[2][col] = g2[c];
        ++col;
      }
      if (!det3(m).is_zero()) return true;
    }
  }
  return false;
}

// --- generic degree and leading relations ---------------------------------------

GenericDegree generic_degree(const BivarPoly& R, const TriDegree& d1, const TriDegree& d2) {
  if (R.is_zero()) throw ZeroInput("generic degree of the zero polynomial");
  if (d1.is_minus_infinity() || d2.is_minus_infinity()) throw ZeroInput("generic degree needs finite degrees");
  GenericDegree out;
  for (const auto& [e, c] : R.terms()) {
    const Tri g = static_cast<std::int64_t>(e.first) * d1.value() + static_cast<std::int64_t>(e.second) * d2.value();
    if (out.ged.is_minus_infinity() || TriDegree(g) > out.ged) {
      out.ged = g;
      out.gen = BivarPoly::monomial(e.first, e.second, c);
    } else if (TriDegree(g) == out.ged) {
      out.gen = out.gen + BivarPoly::monomial(e.first, e.second, c);
    }
  }
  return out;
}

std::optional<LeadingRelation> find_leading_relation(const CoordClass& f1, const CoordClass& f2) {
  if (f1.is_zero() || f2.is_zero()) throw ZeroInput("leading relation of a zero class");
  if (f1.is_constant() || f2.is_constant()) throw InvariantError("leading relation needs nonconstant classes");
  const Tri d1 = deg_class(f1).value();
  const Tri d2 = deg_class(f2).value();
  std::size_t k = 0;
  while (d1[k] == 0) ++k;
  if (d2[k] == 0) return std::nullopt;
  const std::int64_t g = std::gcd(d1[k], d2[k]);
  const std::int64_t s1 = d2[k] / g;
  const std::int64_t s2 = d1[k] / g;
  if (!(s1 * d1 == s2 * d2)) return std::nullopt;

  const GradedClass a = leading_class(f1).pow(static_cast<unsigned>(s1));
  const GradedClass b = leading_class(f2).pow(static_cast<unsigned>(s2));
  const Term& lead = a.rep().leading_term();
  const Scalar cb = b.rep().coefficient(lead.monomial);
  if (cb.is_zero()) return std::nullopt;
  const Scalar lambda = lead.coeff / cb;
  if (!(a.rep() == lambda * b.rep())) return std::nullopt;
  return LeadingRelation{static_cast<unsigned>(s1), static_cast<unsigned>(s2), lambda};
}

namespace {

/// Division by H, which is monic of degree s1 in X1.
std::optional<BivarPoly> divide_by_relation(const BivarPoly& S, const LeadingRelation& rel) {
  BivarPoly rest = S;
  BivarPoly quotient;
  while (true) {
    // Highest X1-degree term with X1-degree >= s1.
    const BivarPoly::Exponents* top = nullptr;
    Scalar c;
    for (const auto& [e, v] : rest.terms()) {
      if (e.first >= rel.s1 && (top == nullptr || e.first > top->first ||
                                (e.first == top->first && e.second > top->second))) {
        top = &e;
        c = v;
      }
    }
    if (top == nullptr) break;
    const BivarPoly q = BivarPoly::monomial(top->first - rel.s1, top->second, c);
    quotient = quotient + q;
    rest = rest - q * rel.polynomial();
  }
  if (!rest.is_zero()) return std::nullopt;
  return quotient;
}

}  // namespace

unsigned relation_order(const BivarPoly& S, const LeadingRelation& relation) {
  if (S.is_zero()) throw ZeroInput("relation order of the zero polynomial");
  unsigned n = 0;
  BivarPoly cur = S;
  while (auto q = divide_by_relation(cur, relation)) {
    cur = std::move(*q);
    ++n;
  }
  return n;
}

bool leading_in_univariate_algebra(const CoordClass& f1, const CoordClass& f2) {
  if (f1.is_constant()) return true;
  if (f2.is_constant()) return false;
  auto rel = find_leading_relation(f1, f2);
  return rel && rel->s1 == 1;
}

bool check_parachute_chain(const CoordClass& f1, const CoordClass& f2, const BivarPoly& R, unsigned n) {
  const ParachuteReport para = parachute(f1, f2);
  const TriDegree value = deg_class(R.evaluate(f1, f2));
  if (value.is_minus_infinity()) return false;
  const auto nn = static_cast<std::int64_t>(n);
  const Tri lhs = static_cast<std::int64_t>(R.degree_x2()) * para.d2.value() - nn * para.nabla;
  const bool chain = n == 0 ? lhs <= value.value() : lhs < value.value();
  if (!chain) return false;
  if (n == 0) return true;
  auto rel = find_leading_relation(f1, f2);
  if (!rel) return true;
  const Tri lhs3 = nn * static_cast<std::int64_t>(rel->s1) * para.d1.value() - nn * para.nabla;
  return lhs3 < value.value();
}

bool check_minoration(const CoordClass& f1, const CoordClass& f2, const BivarPoly& R) {
  (void)parachute(f1, f2);
  return deg_class(f2 * R.evaluate(f1, f2)) > deg_class(f1);
}

}  // namespace quadric
