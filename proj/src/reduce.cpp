#include "quadric/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "quadric/error.hpp"
#include "quadric/linalg.hpp"

namespace quadric {

void SearchBudget::validate() const {
  if (max_ged_sum == 0 || max_cancellation_rounds == 0) {
    throw InvariantError("search budget caps must be positive");
  }
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Found: return "found";
    case Verdict::NotFound: return "not-found";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "";
}

std::string obstruction_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::None: return "none";
    case ObstructionKind::DegreeIncrease: return "degree-increase";
    case ObstructionKind::Monomial: return "monomial";
    case ObstructionKind::Linear: return "linear";
    case ObstructionKind::BudgetExhausted: return "budget-exhausted";
  }
  return "";
}

std::string wild_verdict_name(WildVerdict v) {
  switch (v) {
    case WildVerdict::Wild: return "wild";
    case WildVerdict::Tame: return "tame";
    case WildVerdict::Inconclusive: return "inconclusive";
  }
  return "";
}

bool Obstruction::is_proof() const {
  return kind == ObstructionKind::DegreeIncrease || kind == ObstructionKind::Monomial ||
         kind == ObstructionKind::Linear;
}

// --- monomial membership -------------------------------------------------------

namespace {

bool member_rec(std::array<std::int64_t, 4> rest, const std::vector<Monomial>& gens, std::size_t k) {
  if (k == gens.size()) return rest == std::array<std::int64_t, 4>{0, 0, 0, 0};
  const Monomial& g = gens[k];
  if (g.is_one()) return member_rec(rest, gens, k + 1);
  std::int64_t cmax = -1;
  for (std::size_t v = 0; v < 4; ++v) {
    if (g.e[v] == 0) continue;
    const std::int64_t c = rest[v] / g.e[v];
    cmax = cmax < 0 ? c : std::min(cmax, c);
  }
  for (std::int64_t c = cmax; c >= 0; --c) {
    std::array<std::int64_t, 4> next = rest;
    for (std::size_t v = 0; v < 4; ++v) next[v] -= c * g.e[v];
    if (member_rec(next, gens, k + 1)) return true;
  }
  return false;
}

bool member_signed(const std::array<std::int64_t, 4>& target, const std::vector<Monomial>& gens) {
  for (auto x : target) {
    if (x < 0) return false;
  }
  return member_rec(target, gens, 0);
}

}  // namespace

bool monomial_subalgebra_member(const Monomial& target, const std::vector<Monomial>& gens) {
  return member_signed({target.e[0], target.e[1], target.e[2], target.e[3]}, gens);
}

// --- coordinate reduction --------------------------------------------------------

namespace {

/// Terms of nf(a * b) of weight >= floor.
Polynomial product_above(const Polynomial& a, const Polynomial& b, const Tri& floor) {
  std::unordered_map<std::uint64_t, Scalar> acc;
  for (const Term& ta : a.terms()) {
    const Tri wa = ta.monomial.weight();
    for (const Term& tb : b.terms()) {
      if (wa + tb.monomial.weight() < floor) break;
      auto [it, inserted] = acc.try_emplace((ta.monomial * tb.monomial).pack(), ta.coeff * tb.coeff);
      if (!inserted) it->second += ta.coeff * tb.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [k, c] : acc) terms.push_back(Term{Monomial::unpack(k), std::move(c)});
  const Polynomial reduced = nf_coord(Polynomial::from_terms(std::move(terms))).rep();
  std::vector<Term> kept;
  for (const Term& t : reduced.terms()) {
    if (t.monomial.weight() < floor) break;
    kept.push_back(t);
  }
  return Polynomial::from_terms(std::move(kept));
}

bool single_monomial(const Polynomial& p) { return p.size() == 1; }

std::optional<ExponentSystem> monomial_system(const CoordClass& f, const CoordClass& g, const CoordClass& h) {
  const Polynomial fw = leading_class(f).rep();
  const Polynomial gw = leading_class(g).rep();
  const Polynomial hw = leading_class(h).rep();
  if (!single_monomial(fw) || !single_monomial(gw) || !single_monomial(hw)) return std::nullopt;
  const Monomial mf = fw.leading_term().monomial;
  const Monomial mg = gw.leading_term().monomial;
  const Monomial mh = hw.leading_term().monomial;
  // Products stay x1x4-free, so no rewriting can interfere.
  const bool no_x1 = mf.e[0] == 0 && mg.e[0] == 0 && mh.e[0] == 0;
  const bool no_x4 = mf.e[3] == 0 && mg.e[3] == 0 && mh.e[3] == 0;
  if (!no_x1 && !no_x4) return std::nullopt;
  ExponentSystem sys;
  for (std::size_t v = 0; v < 4; ++v) {
    sys.target[v] = static_cast<std::int64_t>(mf.e[v]) - static_cast<std::int64_t>(mg.e[v]);
  }
  sys.generators = {mg, mh};
  return sys;
}

struct Candidate {
  unsigned i;
  unsigned j;
  Tri ged;
};

/// Generators (a, b) of C[g, h] with a = a_in(g, h), b = b_in(g, h).
struct Generators {
  CoordClass a, b;
  BivarPoly a_in = BivarPoly::X1();
  BivarPoly b_in = BivarPoly::X2();
};

/// While one leading class is a multiple of a power of the other, subtract
/// that multiple. The algebra is unchanged and the degree drops, so the
/// loop ends; the final pair has independent leading classes or a relation
/// with s1, s2 >= 2. Requires g, h algebraically independent.
Generators simplify_generators(const CoordClass& g, const CoordClass& h) {
  Generators gen{g, h};
  while (true) {
    const auto rel = find_leading_relation(gen.a, gen.b);
    if (!rel) return gen;
    if (rel->s2 == 1) {
      // b^w = (a^w)^s1 / lambda
      const Scalar c = rel->lambda.inverse();
      gen.b = gen.b - c * gen.a.pow(rel->s1);
      gen.b_in = gen.b_in - c * gen.a_in.pow(rel->s1);
    } else if (rel->s1 == 1) {
      gen.a = gen.a - rel->lambda * gen.b.pow(rel->s2);
      gen.a_in = gen.a_in - rel->lambda * gen.b_in.pow(rel->s2);
    } else {
      return gen;
    }
    if (gen.a.is_constant() || gen.b.is_constant()) {
      throw InternalError("generator simplification produced a constant; inputs are dependent");
    }
  }
}

/// Lazily built columns nf(g a^i b^j) restricted to weights >= floor.
class ColumnCache {
 public:
  ColumnCache(const CoordClass& g, const Generators& gen, const Tri& floor) : gen_(gen), floor_(floor) {
    ga_.push_back(g.rep());
    bp_.push_back(Polynomial(1));
  }

  Polynomial column(unsigned i, unsigned j) {
    while (ga_.size() <= i) ga_.push_back((CoordClass(ga_.back()) * gen_.a).rep());
    while (bp_.size() <= j) bp_.push_back((CoordClass(bp_.back()) * gen_.b).rep());
    return product_above(ga_[i], bp_[j], floor_);
  }

 private:
  const Generators& gen_;
  Tri floor_;
  std::vector<Polynomial> ga_;
  std::vector<Polynomial> bp_;
};

/// Leftmost solution of the cancellation system over the given columns.
std::optional<std::vector<Scalar>> solve_cancellation(const std::vector<Polynomial>& columns, const CoordClass& f,
                                                      const Tri& d) {
  std::map<Monomial, std::size_t, std::greater<>> row_of;
  for (const auto& col : columns) {
    for (const Term& term : col.terms()) row_of.emplace(term.monomial, 0);
  }
  for (const Term& term : f.rep().terms()) {
    if (term.monomial.weight() < d) break;
    row_of.emplace(term.monomial, 0);
  }
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;

  linalg::Matrix a(row_of.size(), std::vector<Scalar>(columns.size()));
  std::vector<Scalar> rhs(row_of.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (const Term& term : columns[k].terms()) a[row_of.at(term.monomial)][k] = term.coeff;
  }
  for (const Term& term : f.rep().terms()) {
    if (term.monomial.weight() < d) break;
    rhs[row_of.at(term.monomial)] = -term.coeff;
  }
  return linalg::solve_leftmost(std::move(a), std::move(rhs), columns.size());
}

}  // namespace

CoordinateReduction reduce_coordinate(const CoordClass& f, const CoordClass& g, const CoordClass& h,
                                      const SearchBudget& budget) {
  budget.validate();
  if (f.is_zero()) throw ZeroInput("reduce_coordinate: f is zero");
  if (g.is_constant() || h.is_constant()) throw InvariantError("reduce_coordinate: g and h must be nonconstant");

  if (!independent_at_points(g, h)) (void)parachute(g, h);
  CoordinateReduction out;
  out.deg_before = deg_class(f);
  const Tri d = out.deg_before.value();
  const Tri dg = deg_class(g).value();
  const Tri t = d - dg;
  if (!t.is_natural()) {
    out.obstruction.kind = ObstructionKind::DegreeIncrease;
    out.obstruction.detail = "deg f - deg g = " + t.to_string() + " is not in N^3";
    return out;
  }

  const bool independent_leads = !find_leading_relation(g, h);
  const Generators gen = simplify_generators(g, h);
  const Tri da = deg_class(gen.a).value();
  const Tri db = deg_class(gen.b).value();
  const auto rel = find_leading_relation(gen.a, gen.b);

  // Candidate exponent pairs (i, j) for P(a, b) = sum c_ij a^i b^j with
  // deg P(a, b) = t.
  std::vector<Candidate> cands;
  bool truncated = false;
  auto ged_of = [&](std::int64_t i, std::int64_t j) { return i * da + j * db; };
  if (!rel) {
    // Independent leading classes: deg P(a, b) = ged P.
    for (std::int64_t i = 0; i * da.sum() <= t.sum(); ++i) {
      for (std::int64_t j = 0; ged_of(i, j).sum() <= t.sum(); ++j) {
        if (ged_of(i, j) == t) cands.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), t});
      }
    }
  } else {
    // deg P(a, b) >= ged P - n nabla with n the H-adic order of P^gen, and
    // n (s1 da - nabla) < t bounds n whenever s1 da - nabla is positive.
    const ParachuteReport para = parachute(gen.a, gen.b);
    const Tri v = static_cast<std::int64_t>(rel->s1) * da - para.nabla;
    std::int64_t limit = 0;
    if (v.sum() > 0) {
      const std::int64_t n_max = t.sum() / v.sum();
      limit = t.sum() + std::max<std::int64_t>(0, n_max * para.nabla.sum());
    } else {
      limit = budget.max_ged_sum;
      truncated = true;
    }
    for (std::int64_t i = 0; i * da.sum() <= limit; ++i) {
      for (std::int64_t j = 0; ged_of(i, j).sum() <= limit; ++j) {
        const Tri ged = ged_of(i, j);
        if (ged < t) continue;
        cands.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), ged});
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.ged != y.ged) return x.ged < y.ged;
    return x.i < y.i;
  });
  out.unknowns = cands.size();
  // One cancellation round per generic-degree layer of P.
  std::set<Tri> layers;
  for (const auto& c : cands) layers.insert(c.ged);
  out.rounds = layers.size();
  if (out.rounds > budget.max_cancellation_rounds) {
    out.verdict = Verdict::Inconclusive;
    out.obstruction.kind = ObstructionKind::BudgetExhausted;
    out.obstruction.detail = std::to_string(out.rounds) + " generic-degree layers exceed the cancellation-round cap";
    return out;
  }

  // Widen the candidate set one ged-sum level at a time, so the first
  // solution found has the least possible ged.
  ColumnCache cache(g, gen, d);
  std::vector<Polynomial> columns;
  std::size_t next = 0;
  while (next < cands.size()) {
    const std::int64_t level = cands[next].ged.sum();
    while (next < cands.size() && cands[next].ged.sum() == level) {
      columns.push_back(cache.column(cands[next].i, cands[next].j));
      ++next;
    }
    auto x = solve_cancellation(columns, f, d);
    if (!x) continue;
    BivarPoly in_ab;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      in_ab = in_ab + BivarPoly::monomial(cands[k].i, cands[k].j, (*x)[k]);
    }
    BivarPoly p = in_ab.substitute(gen.a_in, gen.b_in);
    // P(g, h) through the simplified generators; expanding P in g and h
    // can be far larger than the result.
    CoordClass value = in_ab.evaluate(gen.a, gen.b);
    out.deg_after = deg_class(f + g * value);
    if (!(out.deg_after < out.deg_before)) {
      throw InternalError("reduce_coordinate: solution does not lower the degree");
    }
    out.verdict = Verdict::Found;
    out.ged_p = generic_degree(p, TriDegree(dg), deg_class(h)).ged;
    out.p = std::move(p);
    out.p_value = std::move(value);
    return out;
  }

  if (truncated) {
    out.verdict = Verdict::Inconclusive;
    out.obstruction.kind = ObstructionKind::BudgetExhausted;
    out.obstruction.detail = "no cancellation with ged sum <= " + std::to_string(budget.max_ged_sum) +
                             "; the parachute bound is vacuous";
    return out;
  }

  out.verdict = Verdict::NotFound;
  if (independent_leads) {
    if (auto sys = monomial_system(f, g, h)) {
      if (member_signed(sys->target, sys->generators)) {
        throw InternalError("reduce_coordinate: exponent system solvable but cancellation infeasible");
      }
      out.obstruction.kind = ObstructionKind::Monomial;
      out.obstruction.system = std::move(sys);
      out.obstruction.detail = "leading monomial of f / g is outside the monomial algebra of g, h";
      return out;
    }
  }
  out.obstruction.kind = ObstructionKind::Linear;
  out.obstruction.detail = "cancellation system over " + std::to_string(cands.size()) +
                           " exponent pairs is inconsistent";
  return out;
}

// --- elementary search ---------------------------------------------------------

namespace {

struct Roles {
  Family family;
  int f, g, h;
};

constexpr std::array<Roles, 4> kRoles{{
    {Family::E13, 1, 2, 4},
    {Family::E24, 2, 1, 3},
    {Family::E12, 1, 3, 4},
    {Family::E34, 3, 1, 2},
}};

}  // namespace

namespace {

/// E o F for the letter of `family` with a = b = 1, given v = P(g, h).
Autom apply_letter(Family family, const Autom& F, const CoordClass& v) {
  std::array<CoordClass, 4> c = F.coords();
  switch (family) {
    case Family::E13:
      c[0] = c[0] + c[1] * v;
      c[2] = c[2] + c[3] * v;
      break;
    case Family::E24:
      c[1] = c[1] + c[0] * v;
      c[3] = c[3] + c[2] * v;
      break;
    case Family::E12:
      c[0] = c[0] + c[2] * v;
      c[1] = c[1] + c[3] * v;
      break;
    case Family::E34:
      c[2] = c[2] + c[0] * v;
      c[3] = c[3] + c[1] * v;
      break;
  }
  return Autom::make(c);
}

}  // namespace

ElementarySearch find_elementary_reduction(const Autom& F, const SearchBudget& budget) {
  ElementarySearch out;
  bool inconclusive = false;
  std::optional<std::size_t> best;
  for (const Roles& roles : kRoles) {
    CoordinateReduction res;
    try {
      res = reduce_coordinate(F[roles.f], F[roles.g], F[roles.h], budget);
    } catch (const DependentInputs& e) {
      throw InternalError(std::string("automorphism coordinates reported dependent: ") + e.what());
    }
    inconclusive = inconclusive || res.verdict == Verdict::Inconclusive;
    if (res.verdict == Verdict::Found && (!best || res.ged_p < out.attempts[*best].result.ged_p)) {
      best = out.attempts.size();
    }
    out.attempts.push_back({roles.family, std::move(res)});
  }
  if (!best) {
    out.verdict = inconclusive ? Verdict::Inconclusive : Verdict::NotFound;
    return out;
  }
  const FamilyAttempt& win = out.attempts[*best];
  const auto vars = family_variables(win.family);
  const Polynomial hpoly = win.result.p->evaluate(Polynomial::variable(vars[0]), Polynomial::variable(vars[1]));
  out.letter = ElementaryAutom::make(win.family, Scalar(1), Scalar(1), hpoly);
  out.reduced = apply_letter(win.family, F, *win.result.p_value);
  if (!(degree_aut(*out.reduced) < degree_aut(F))) {
    throw InternalError("elementary letter does not lower deg F");
  }
  out.verdict = Verdict::Found;
  return out;
}

// --- decomposition ---------------------------------------------------------------

TameWord Decomposition::replay_word() const {
  TameWord w;
  for (const auto& step : steps) w.letters.emplace_back(step.letter.inverse());
  w.letters.emplace_back(terminal);
  return w;
}

bool WildCertificate::is_conclusive() const {
  return families.size() == 4 &&
         std::all_of(families.begin(), families.end(), [](const FamilyEvidence& e) { return e.obstruction.is_proof(); });
}

Decomposition DecompositionResult::decomposition() const {
  if (status != DecompositionStatus::Done || !terminal) {
    throw InvariantError("decomposition requested from an unfinished search");
  }
  return Decomposition{steps, *terminal};
}

DecompositionResult decompose_tame(const Autom& F, const SearchBudget& budget) {
  budget.validate();
  DecompositionResult out;
  Autom current = F;
  while (true) {
    if (auto orth = as_orthogonal(current)) {
      out.status = DecompositionStatus::Done;
      out.terminal = std::move(orth);
      return out;
    }
    ElementarySearch search = find_elementary_reduction(current, budget);
    if (search.verdict == Verdict::Found) {
      Autom next = std::move(*search.reduced);
      out.steps.push_back({*search.letter, degree_aut(current), degree_aut(next)});
      current = std::move(next);
      continue;
    }
    if (search.verdict == Verdict::NotFound) {
      WildCertificate cert;
      cert.degree = degree_aut(current);
      for (auto& attempt : search.attempts) cert.families.push_back({attempt.family, attempt.result.obstruction});
      out.status = DecompositionStatus::Stuck;
      out.certificate = std::move(cert);
      return out;
    }
    out.status = DecompositionStatus::Inconclusive;
    out.open_attempts = std::move(search.attempts);
    return out;
  }
}

WildCheck certify_wild(const Autom& F, const SearchBudget& budget) {
  WildCheck out;
  out.detail = decompose_tame(F, budget);
  switch (out.detail.status) {
    case DecompositionStatus::Done: out.verdict = WildVerdict::Tame; break;
    case DecompositionStatus::Stuck:
      out.verdict = out.detail.certificate->is_conclusive() ? WildVerdict::Wild : WildVerdict::Inconclusive;
      break;
    case DecompositionStatus::Inconclusive: out.verdict = WildVerdict::Inconclusive; break;
  }
  return out;
}

}  // namespace quadric
