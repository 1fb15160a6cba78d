#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "quadric/analysis.hpp"
#include "quadric/autom.hpp"
#include "quadric/linalg.hpp"
#include "quadric/polynomial.hpp"
#include "quadric/quotient.hpp"

namespace quadric::support {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Small rational, sometimes with an imaginary part.
inline Scalar random_scalar(Rng& rng, bool allow_zero = true, double complex_prob = 0.1) {
  while (true) {
    Scalar s = Scalar::rational(uniform(rng, -5, 5), uniform(rng, 1, 3));
    if (coin(rng, complex_prob)) s += Scalar::rational(uniform(rng, -3, 3), uniform(rng, 1, 2)) * Scalar::i();
    if (allow_zero || !s.is_zero()) return s;
  }
}

inline Scalar random_unit(Rng& rng) {
  static const long nums[] = {1, -1, 2, -2, 1, 3};
  static const long dens[] = {1, 1, 1, 3, 2, 1};
  const int k = uniform(rng, 0, 5);
  return Scalar::rational(nums[k], dens[k]);
}

/// Monomial in the given variables with weight sum <= max_weight_sum.
inline Monomial random_monomial(Rng& rng, const std::vector<int>& vars, int max_weight_sum) {
  Monomial m;
  const int budget = uniform(rng, 0, max_weight_sum);
  for (int tries = 0; tries < 8; ++tries) {
    const int v = vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))];
    Monomial next = m * Monomial::variable(v);
    if (next.weight().sum() > budget) continue;
    m = next;
  }
  return m;
}

inline Polynomial random_poly(Rng& rng, int max_terms, int max_weight_sum,
                              const std::vector<int>& vars = {1, 2, 3, 4}) {
  std::vector<Term> terms;
  const int n = uniform(rng, 1, max_terms);
  for (int k = 0; k < n; ++k) terms.push_back({random_monomial(rng, vars, max_weight_sum), random_scalar(rng)});
  return Polynomial::from_terms(std::move(terms));
}

inline Polynomial random_nonzero_poly(Rng& rng, int max_terms, int max_weight_sum,
                                      const std::vector<int>& vars = {1, 2, 3, 4}) {
  while (true) {
    Polynomial p = random_poly(rng, max_terms, max_weight_sum, vars);
    if (!p.is_zero()) return p;
  }
}

inline Mat2 random_sl2_mat(Rng& rng) {
  Mat2 m;
  const int n = uniform(rng, 0, 3);
  for (int k = 0; k < n; ++k) {
    const long t = uniform(rng, -2, 2);
    m = m * (coin(rng) ? Mat2{1, t, 0, 1} : Mat2{1, 0, t, 1});
  }
  if (coin(rng, 0.2)) m = Scalar(-1) * m;
  return m;
}

inline OrthogonalAutom random_orthogonal(Rng& rng) {
  return OrthogonalAutom::make(SL2Matrix::make(random_sl2_mat(rng)), SL2Matrix::make(random_sl2_mat(rng)),
                               coin(rng));
}

inline ElementaryAutom random_elementary(Rng& rng, int max_weight_sum = 3) {
  static const Family fams[] = {Family::E34, Family::E12, Family::E24, Family::E13};
  const Family f = fams[uniform(rng, 0, 3)];
  const auto v = family_variables(f);
  Polynomial h = random_poly(rng, 3, max_weight_sum, {v[0], v[1]});
  const Scalar a = coin(rng, 0.7) ? Scalar(1) : random_unit(rng);
  const Scalar b = coin(rng, 0.7) ? Scalar(1) : random_unit(rng);
  return ElementaryAutom::make(f, a, b, h);
}

/// Word of 1..max_len letters; elementary letters have h of weight sum <= 3.
inline TameWord random_word(Rng& rng, int max_len = 5) {
  TameWord w;
  const int n = uniform(rng, 1, max_len);
  for (int k = 0; k < n; ++k) {
    if (coin(rng, 0.3)) {
      w.letters.emplace_back(random_orthogonal(rng));
    } else {
      w.letters.emplace_back(random_elementary(rng));
    }
  }
  return w;
}

/// Product over elementary letters of (total degree of h + 1): an a priori
/// bound on how much the word can multiply coordinate degrees.
inline long word_growth(const TameWord& w) {
  long g = 1;
  for (const Letter& l : w.letters) {
    if (const auto* e = std::get_if<ElementaryAutom>(&l)) g *= std::max(e->h().total_degree(), 0L) + 1;
  }
  return g;
}

inline constexpr long kGrowthCap = 27;

/// random_word rejection-sampled to word_growth <= kGrowthCap. Counts
/// rejected draws in *rejected when given.
inline TameWord random_bounded_word(Rng& rng, int max_len = 5, long* rejected = nullptr) {
  for (;;) {
    TameWord w = random_word(rng, max_len);
    if (word_growth(w) <= kGrowthCap) return w;
    if (rejected) ++*rejected;
  }
}

// --- oracles ------------------------------------------------------------------

/// Term-by-term power rule.
inline Polynomial naive_derivative(const Polynomial& p, int var) {
  Polynomial out;
  const auto k = static_cast<std::size_t>(var - 1);
  for (const Term& t : p.terms()) {
    if (t.monomial.e[k] == 0) continue;
    Monomial m = t.monomial;
    m.e[k] -= 1;
    out += Polynomial(m, Scalar(static_cast<long>(t.monomial.e[k])) * t.coeff);
  }
  return out;
}

/// Determinant by recursive cofactor expansion along the first row.
inline Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][c] * cofactor_det(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

inline Polynomial jacobian_oracle(const std::array<Polynomial, 4>& f) {
  std::vector<std::vector<Polynomial>> m(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (int c = 1; c <= 4; ++c) m[r].push_back(naive_derivative(f[r], c));
  }
  return cofactor_det(m);
}

inline Scalar eval_at(const Polynomial& p, const std::array<Scalar, 4>& pt) {
  Scalar sum(0);
  for (const Term& t : p.terms()) {
    Scalar v = t.coeff;
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::uint32_t e = 0; e < t.monomial.e[k]; ++e) v *= pt[k];
    }
    sum += v;
  }
  return sum;
}

/// Random rational point with x1 x4 - x2 x3 = level (level 1: the quadric,
/// level 0: the cone).
inline std::array<Scalar, 4> random_point(Rng& rng, long level) {
  const Scalar x1 = random_scalar(rng, false, 0.0);
  const Scalar x2 = random_scalar(rng, true, 0.0);
  const Scalar x3 = random_scalar(rng, true, 0.0);
  return {x1, x2, x3, (Scalar(level) + x2 * x3) / x1};
}

/// p and r agree on `samples` random points of {q = level}.
inline bool agree_on_level(Rng& rng, const Polynomial& p, const Polynomial& r, long level, int samples = 6) {
  for (int k = 0; k < samples; ++k) {
    const auto pt = random_point(rng, level);
    if (!(eval_at(p, pt) == eval_at(r, pt))) return false;
  }
  return true;
}

inline std::vector<Monomial> monomials_with_weight_sum_at_most(int bound) {
  std::vector<Monomial> out;
  for (std::uint32_t a = 0; a <= static_cast<std::uint32_t>(bound); ++a) {
    for (std::uint32_t b = 0; a + b <= static_cast<std::uint32_t>(bound); ++b) {
      for (std::uint32_t c = 0; a + b + 2 * c <= static_cast<std::uint32_t>(bound); ++c) {
        for (std::uint32_t d = 0; a + b + 2 * c + 2 * d <= static_cast<std::uint32_t>(bound); ++d) {
          out.emplace_back(a, b, c, d);
        }
      }
    }
  }
  return out;
}

/// min over h in span{monomials of weight sum <= h_bound} of the weighted
/// degree of p + (q - 1) h, by linear algebra: the least weight level L
/// such that every coefficient above L can be cancelled.
inline TriDegree brute_force_class_degree(const Polynomial& p, int h_bound = 3) {
  const Polynomial q1 = determinant_form() - Polynomial(1);
  std::vector<Polynomial> gens;
  for (const Monomial& m : monomials_with_weight_sum_at_most(h_bound)) gens.push_back(q1 * Polynomial(m));
  std::vector<Monomial> support;
  for (const Term& t : p.terms()) support.push_back(t.monomial);
  for (const auto& g : gens) {
    for (const Term& t : g.terms()) support.push_back(t.monomial);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<Tri> levels;
  for (const auto& m : support) levels.push_back(m.weight());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Can every coefficient of weight > level vanish?
  auto cancellable_above = [&](const std::optional<Tri>& level) {
    linalg::Matrix a;
    std::vector<Scalar> rhs;
    for (const auto& m : support) {
      if (level && !(m.weight() > *level)) continue;
      std::vector<Scalar> row;
      for (const auto& g : gens) row.push_back(g.coefficient(m));
      a.push_back(std::move(row));
      rhs.push_back(-p.coefficient(m));
    }
    return linalg::solve_leftmost(std::move(a), std::move(rhs), gens.size()).has_value();
  };
  if (cancellable_above(std::nullopt)) return TriDegree::minus_infinity();
  for (const Tri& level : levels) {
    if (cancellable_above(level)) return level;
  }
  return TriDegree::minus_infinity();
}

/// target in the monoid generated by gens, by enumerating products of at
/// most max_factors generators.
inline bool enumerate_membership(const Monomial& target, const std::vector<Monomial>& gens, int max_factors) {
  std::vector<Monomial> frontier{Monomial()};
  for (int k = 0; k <= max_factors; ++k) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      if (m == target) return true;
      for (const auto& g : gens) next.push_back(m * g);
    }
    frontier = std::move(next);
  }
  return false;
}


// --- analysis instances ---------------------------------------------------------

/// Nonzero R with total degree <= max_deg.
inline BivarPoly random_bivar(Rng& rng, int max_terms, unsigned max_deg) {
  BivarPoly r;
  while (r.is_zero()) {
    const int n = uniform(rng, 1, max_terms);
    for (int k = 0; k < n; ++k) {
      const auto i = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_deg)));
      const auto j = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_deg - i)));
      r = r + BivarPoly::monomial(i, j, random_scalar(rng, false));
    }
  }
  return r;
}

/// Nonconstant class of weight sum <= max_weight_sum.
inline CoordClass random_class(Rng& rng, int max_terms, int max_weight_sum) {
  while (true) {
    CoordClass c = nf_coord(random_poly(rng, max_terms, max_weight_sum));
    if (deg_class(c) > TriDegree(0, 0, 0)) return c;
  }
}

/// Random class whose terms all have weight sum < bound (zero allowed).
inline CoordClass random_lower(Rng& rng, std::int64_t bound) {
  if (bound <= 1 || coin(rng, 0.2)) return CoordClass();
  return nf_coord(random_poly(rng, 3, static_cast<int>(bound - 1)));
}

/// A pair whose leading classes satisfy (f1^w)^s1 = lambda (f2^w)^s2 by
/// construction: f1 = u^s2 + lower, f2 = mu u^s1 + lower.
struct RelationPair {
  CoordClass f1, f2;
  unsigned s1 = 1, s2 = 1;
};

inline RelationPair random_relation_pair(Rng& rng) {
  static const std::pair<unsigned, unsigned> exps[] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 3}, {3, 2}, {3, 1}};
  const auto [s1, s2] = exps[uniform(rng, 0, 6)];
  const CoordClass u = random_class(rng, 2, 2);
  const std::int64_t w = deg_class(u).value().sum();
  const Scalar mu = random_unit(rng);
  RelationPair out;
  out.s1 = s1;
  out.s2 = s2;
  out.f1 = u.pow(s2) + random_lower(rng, w * s2);
  out.f2 = mu * u.pow(s1) + random_lower(rng, w * s1);
  return out;
}

inline BivarPoly relation_power(const LeadingRelation& rel, unsigned n) { return rel.polynomial().pow(n); }

/// R = H^n S + terms of smaller generic degree, for a pair with relation H.
inline BivarPoly random_h_multiple(Rng& rng, const LeadingRelation& rel, unsigned n, const TriDegree& d1,
                                   const TriDegree& d2) {
  const BivarPoly main = relation_power(rel, n) * random_bivar(rng, 2, 2);
  const TriDegree top = generic_degree(main, d1, d2).ged;
  BivarPoly r = main;
  for (int k = 0; k < uniform(rng, 0, 3); ++k) {
    const BivarPoly extra = random_bivar(rng, 1, 3);
    if (generic_degree(extra, d1, d2).ged < top) r = r + extra;
  }
  return r;
}

}  // namespace quadric::support
