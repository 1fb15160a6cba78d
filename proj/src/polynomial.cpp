#include "quadric/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "quadric/error.hpp"

namespace quadric {

std::string Tri::to_string() const {
  std::ostringstream os;
  os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
  return os.str();
}

std::string TriDegree::to_string() const { return finite_ ? value_.to_string() : "-inf"; }

std::ostream& operator<<(std::ostream& os, const Tri& t) { return os << t.to_string(); }
std::ostream& operator<<(std::ostream& os, const TriDegree& d) { return os << d.to_string(); }

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += static_cast<char>('1' + k);
    if (e[k] > 1) out += '^' + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

namespace {

/// Unordered accumulation of terms; converted to canonical form once.
class TermAccumulator {
 public:
  explicit TermAccumulator(std::size_t hint = 0) { map_.reserve(hint); }

  void add(const Monomial& m, const Scalar& c) {
    auto [it, inserted] = map_.try_emplace(m.pack(), c);
    if (!inserted) it->second += c;
  }

  Polynomial finish() {
    std::vector<Term> terms;
    terms.reserve(map_.size());
    for (auto& [key, c] : map_) {
      if (!c.is_zero()) terms.push_back(Term{Monomial::unpack(key), std::move(c)});
    }
    map_.clear();
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  std::unordered_map<std::uint64_t, Scalar> map_;
};

}  // namespace

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, c});
}

Polynomial::Polynomial(const Monomial& m, const Scalar& c) {
  if (!c.is_zero()) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial{}); }

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Scalar(0);
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.monomial.total_degree());
  return d;
}

unsigned Polynomial::variable_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (t.monomial.e[k] != 0) mask |= 1U << k;
    }
  }
  return mask;
}

bool Polynomial::uses_only(std::initializer_list<int> vars) const {
  unsigned allowed = 0;
  for (int v : vars) allowed |= 1U << static_cast<unsigned>(v - 1);
  return (variable_mask() & ~allowed) == 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <typename Combine>
Polynomial merge(const Polynomial& a, const Polynomial& b, Combine sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->monomial > ib->monomial)) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end() || ib->monomial > ia->monomial) {
      out.push_back(Term{ib->monomial, sign_b(ib->coeff)});
      ++ib;
    } else {
      Scalar c = ia->coeff + sign_b(ib->coeff);
      if (!c.is_zero()) out.push_back(Term{ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return merge(a, b, [](const Scalar& c) { return c; });
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return merge(a, b, [](const Scalar& c) { return -c; });
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].monomial.is_one()) return a.terms_[0].coeff * b;
  if (b.size() == 1 && b.terms_[0].monomial.is_one()) return b.terms_[0].coeff * a;
  TermAccumulator acc(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) acc.add(ta.monomial * tb.monomial, ta.coeff * tb.coeff);
  }
  return acc.finish();
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  if (c.is_zero()) return {};
  Polynomial r = p;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) || !(a.terms_[k].coeff == b.terms_[k].coeff)) {
      return false;
    }
  }
  return true;
}

namespace {

std::string magnitude(const mpq_class& v) {
  mpq_class a = abs(v);
  return a.get_str();
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool unit = t.monomial.is_one();
    std::string body;
    bool negative = false;
    if (t.coeff.is_real()) {
      negative = sgn(t.coeff.re()) < 0;
      const bool one = abs(t.coeff.re()) == 1;
      if (unit) {
        body = magnitude(t.coeff.re());
      } else if (one) {
        body = t.monomial.to_string();
      } else {
        body = magnitude(t.coeff.re()) + "*" + t.monomial.to_string();
      }
    } else {
      body = "(" + t.coeff.to_string() + ")";
      if (!unit) body += "*" + t.monomial.to_string();
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

const Polynomial& determinant_form() {
  static const Polynomial q = Polynomial(Monomial(1, 0, 0, 1)) - Polynomial(Monomial(0, 1, 1, 0));
  return q;
}

Polynomial ring_arith(const Polynomial& p, const Polynomial& r, RingOp op, const Scalar& c) {
  switch (op) {
    case RingOp::add:
      return p + r;
    case RingOp::sub:
      return p - r;
    case RingOp::mul:
      return p * r;
    case RingOp::scalar_mul:
      return c * p;
  }
  throw InternalError("unknown ring operation");
}

TriDegree weighted_degree(const Polynomial& p) {
  if (p.is_zero()) return TriDegree::minus_infinity();
  // Storage order refines the weight order, so the first term is of top weight.
  return TriDegree(p.leading_term().monomial.weight());
}

Polynomial leading_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroInput("leading part of the zero polynomial");
  const Tri top = p.leading_term().monomial.weight();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.monomial.weight() != top) break;
    out.push_back(t);
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial partial_derivative(const Polynomial& p, int index) {
  if (index < 1 || index > 4) throw InvariantError("variable index out of range 1..4");
  const auto k = static_cast<std::size_t>(index - 1);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.monomial.e[k] == 0) continue;
    Monomial m = t.monomial;
    Scalar c = t.coeff * Scalar(static_cast<long>(m.e[k]));
    m.e[k] -= 1;
    out.push_back(Term{m, std::move(c)});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial jacobian4(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3,
                     const Polynomial& f4) {
  const std::array<const Polynomial*, 4> f{&f1, &f2, &f3, &f4};
  std::array<std::array<Polynomial, 4>, 4> d;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) d[i][j] = partial_derivative(*f[i], static_cast<int>(j + 1));
  }
  // Laplace expansion along rows {0, 1}: sum over column pairs of the
  // product of complementary 2x2 minors.
  Polynomial det;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = j + 1; k < 4; ++k) {
      Polynomial top = d[0][j] * d[1][k] - d[0][k] * d[1][j];
      if (top.is_zero()) continue;
      std::array<std::size_t, 2> rest{};
      std::size_t n = 0;
      for (std::size_t c = 0; c < 4; ++c) {
        if (c != j && c != k) rest[n++] = c;
      }
      Polynomial bottom = d[2][rest[0]] * d[3][rest[1]] - d[2][rest[1]] * d[3][rest[0]];
      if (bottom.is_zero()) continue;
      Polynomial term = top * bottom;
      det = ((1 + j + k) % 2 == 0) ? det + term : det - term;
    }
  }
  return det;
}

Polynomial substitute(const Polynomial& p, const std::array<Polynomial, 4>& g) {
  if (p.is_zero()) return {};
  std::array<std::uint32_t, 4> max_exp{0, 0, 0, 0};
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < 4; ++k) max_exp[k] = std::max(max_exp[k], t.monomial.e[k]);
  }
  std::array<std::vector<Polynomial>, 4> powers;
  for (std::size_t k = 0; k < 4; ++k) {
    powers[k].push_back(Polynomial(1));
    for (std::uint32_t e = 1; e <= max_exp[k]; ++e) powers[k].push_back(powers[k].back() * g[k]);
  }
  TermAccumulator acc;
  for (const auto& t : p.terms()) {
    Polynomial prod(t.coeff);
    for (std::size_t k = 0; k < 4 && !prod.is_zero(); ++k) {
      if (t.monomial.e[k] > 0) prod = prod * powers[k][t.monomial.e[k]];
    }
    for (const auto& pt : prod.terms()) acc.add(pt.monomial, pt.coeff);
  }
  return acc.finish();
}

}  // namespace quadric
