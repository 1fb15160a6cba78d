#include <gtest/gtest.h>

#include "quadric/error.hpp"
#include "quadric/parser.hpp"
#include "quadric/reduce.hpp"
#include "quadric/report.hpp"
#include "test_support.hpp"

using namespace quadric;
using quadric::support::Rng;

namespace {

CoordClass C(const char* s) { return nf_coord(parse_polynomial(s)); }
CoordClass X(int k) { return CoordClass::variable(k); }
Monomial M(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) { return Monomial(a, b, c, d); }

struct Role {
  Family family;
  int f, g, h;
  int partner_f, partner_g, partner_h;
};

// The rewritten coordinate, the pair P is evaluated at, and the second
// coordinate the same letter rewrites.
const Role kRoles[] = {
    {Family::E13, 1, 2, 4, 3, 4, 2},
    {Family::E24, 2, 1, 3, 4, 3, 1},
    {Family::E12, 1, 3, 4, 2, 4, 3},
    {Family::E34, 3, 1, 2, 4, 2, 1},
};

}  // namespace

TEST(ReduceCoordinate, Examples) {
  auto r = reduce_coordinate(C("x1 + x2*x4"), X(2), X(4));
  ASSERT_EQ(r.verdict, Verdict::Found);
  EXPECT_EQ(*r.p, Scalar(-1) * BivarPoly::X2());
  EXPECT_EQ(r.deg_before, TriDegree(0, 2, 1));
  EXPECT_EQ(r.deg_after, TriDegree(1, 0, 0));
  EXPECT_EQ(deg_class(C("x1")), TriDegree(1, 0, 0));

  r = reduce_coordinate(X(1), X(2), X(4));
  EXPECT_EQ(r.verdict, Verdict::NotFound);
  EXPECT_TRUE(r.obstruction.is_proof());

  for (unsigned n = 1; n <= 3; ++n) {
    const Autom s = sigma_n(n);
    r = reduce_coordinate(s[1], s[2], s[4]);
    EXPECT_EQ(r.verdict, Verdict::NotFound);
    EXPECT_EQ(r.obstruction.kind, ObstructionKind::Monomial);
    ASSERT_TRUE(r.obstruction.system.has_value());
    EXPECT_EQ(r.obstruction.system->target, (std::array<std::int64_t, 4>{0, 0, 0, n}));
    EXPECT_EQ(r.obstruction.system->generators, (std::vector<Monomial>{M(0, 1, 0, 0), M(0, 1, 0, n)}));
  }
  EXPECT_THROW(reduce_coordinate(X(1), X(2), C("2*x2")), DependentInputs);
}

TEST(ReduceCoordinate, RelationDropIsFound) {
  // g = x2, h = x2^2 + x1: the leading relation X1 - X2^2 lets P reach
  // below the generic degree.
  const CoordClass f = C("x1*x2 + x3");
  const auto r = reduce_coordinate(f, X(2), C("x2^2 + x1"));
  ASSERT_EQ(r.verdict, Verdict::Found);
  EXPECT_LT(r.deg_after, r.deg_before);
  EXPECT_EQ(deg_class(f + X(2) * *r.p_value), r.deg_after);
}

TEST(MonomialMembership, Examples) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    EXPECT_FALSE(monomial_subalgebra_member(M(0, 0, 0, n), {M(0, 1, 0, 0), M(0, 1, 0, n)}));
  }
  EXPECT_TRUE(monomial_subalgebra_member(M(0, 2, 0, 1), {M(0, 1, 0, 0), M(0, 1, 0, 1)}));
  EXPECT_FALSE(monomial_subalgebra_member(M(0, 1, 0, 2), {M(0, 1, 0, 0), M(0, 1, 0, 1)}));
  EXPECT_FALSE(support::enumerate_membership(M(0, 1, 0, 2), {M(0, 1, 0, 0), M(0, 1, 0, 1)}, 3));
  EXPECT_TRUE(monomial_subalgebra_member(M(0, 0, 0, 0), {M(0, 1, 0, 0)}));
  EXPECT_FALSE(monomial_subalgebra_member(M(0, 1, 0, 0), {}));
}

TEST(MonomialMembership, AgreesWithEnumeration) {
  Rng rng(51);
  int members = 0;
  for (int k = 0; k < 400; ++k) {
    std::vector<Monomial> gens;
    const int n = support::uniform(rng, 1, 3);
    while (static_cast<int>(gens.size()) < n) {
      const Monomial g = support::random_monomial(rng, {2, 3, 4}, 4);
      if (!g.is_one()) gens.push_back(g);
    }
    Monomial target = support::random_monomial(rng, {2, 3, 4}, 8);
    if (support::coin(rng)) {
      target = Monomial();
      for (int j = 0; j < support::uniform(rng, 0, 3); ++j) {
        target = target * gens[static_cast<std::size_t>(support::uniform(rng, 0, n - 1))];
      }
    }
    // Every generator has weight sum >= 1, so no product longer than the
    // target's weight sum can equal it.
    const bool expected =
        support::enumerate_membership(target, gens, static_cast<int>(target.weight().sum()));
    EXPECT_EQ(monomial_subalgebra_member(target, gens), expected);
    members += expected ? 1 : 0;
  }
  EXPECT_GT(members, 100);
}

TEST(ElementaryReduction, Examples) {
  const Autom F = elem_to_autom(ElementaryAutom::make(Family::E13, 1, 1, parse_polynomial("x2^2")));
  auto s = find_elementary_reduction(F);
  ASSERT_EQ(s.verdict, Verdict::Found);
  EXPECT_EQ(*s.letter, ElementaryAutom::make(Family::E13, 1, 1, parse_polynomial("-x2^2")));
  EXPECT_EQ(*s.reduced, Autom::identity());

  s = find_elementary_reduction(sigma_n(1));
  EXPECT_EQ(s.verdict, Verdict::NotFound);
  EXPECT_EQ(s.attempts.size(), 4u);

  // Orthogonal maps already at the minimal degree (2,2,2). Shears such as
  // x1 + t x3 sit higher and do reduce.
  Rng rng(52);
  int minimal = 0;
  for (int k = 0; k < 40; ++k) {
    const Autom o = orth_to_autom(support::random_orthogonal(rng));
    if (!(degree_aut(o) == TriDegree(2, 2, 2))) continue;
    ++minimal;
    s = find_elementary_reduction(o);
    EXPECT_EQ(s.verdict, Verdict::NotFound) << o.to_string();
  }
  EXPECT_GT(minimal, 3);
  EXPECT_EQ(find_elementary_reduction(orth_to_autom(OrthogonalAutom::transposition())).verdict, Verdict::NotFound);
}

TEST(Decompose, Examples) {
  Rng rng(53);
  const OrthogonalAutom o = support::random_orthogonal(rng);
  auto d = decompose_tame(orth_to_autom(o));
  ASSERT_EQ(d.status, DecompositionStatus::Done);
  EXPECT_TRUE(d.steps.empty());
  EXPECT_EQ(orth_to_autom(*d.terminal), orth_to_autom(o));

  d = decompose_tame(sigma_n(1));
  ASSERT_EQ(d.status, DecompositionStatus::Stuck);
  ASSERT_TRUE(d.certificate.has_value());
  EXPECT_TRUE(d.certificate->is_conclusive());
  EXPECT_EQ(d.certificate->degree, TriDegree(0, 8, 4));

  const TameWord w = parse_tame_word("E13(h=x2^2) * E34(a=2,h=x1 - 1) * E24(b=-1,h=x3)");
  d = decompose_tame(word_to_autom(w));
  ASSERT_EQ(d.status, DecompositionStatus::Done);
  EXPECT_EQ(word_to_autom(d.decomposition().replay_word()), word_to_autom(w));
}

TEST(CertifyWild, SigmaIsWild) {
  for (unsigned n = 1; n <= 2; ++n) {
    const WildCheck c = certify_wild(sigma_n(n));
    ASSERT_EQ(c.verdict, WildVerdict::Wild);
    const WildCertificate& cert = *c.detail.certificate;
    EXPECT_TRUE(cert.is_conclusive());
    ASSERT_EQ(cert.families.size(), 4u);
    for (const FamilyEvidence& e : cert.families) {
      EXPECT_TRUE(e.obstruction.is_proof()) << family_name(e.family);
      if (e.family == Family::E13) {
        EXPECT_EQ(e.obstruction.kind, ObstructionKind::Monomial);
        EXPECT_FALSE(monomial_subalgebra_member(M(0, 0, 0, n), e.obstruction.system->generators));
      }
    }
  }
  EXPECT_EQ(certify_wild(Autom::identity()).verdict, WildVerdict::Tame);
}

TEST(CertifyWild, CertificateIsBudgetIndependent) {
  SearchBudget big;
  big.max_ged_sum = 90;
  big.max_cancellation_rounds = 200;
  for (unsigned n = 1; n <= 2; ++n) {
    const WildCheck a = certify_wild(sigma_n(n));
    const WildCheck b = certify_wild(sigma_n(n), big);
    EXPECT_EQ(to_json(*a.detail.certificate).dump(), to_json(*b.detail.certificate).dump());
  }
}

TEST(SearchBudget, Validation) {
  SearchBudget b;
  EXPECT_NO_THROW(b.validate());
  b.max_ged_sum = 0;
  EXPECT_THROW(b.validate(), InvariantError);
  b = SearchBudget{};
  b.max_cancellation_rounds = 0;
  EXPECT_THROW(b.validate(), InvariantError);
}

TEST(ReduceProperty, FoundIsSoundAndStructuralApplyMatchesCompose) {
  Rng rng(54);
  int found = 0;
  for (int k = 0; k < 60; ++k) {
    const TameWord w = support::random_bounded_word(rng, 3);
    const Autom F = word_to_autom(w);
    const ElementarySearch s = find_elementary_reduction(F);
    for (const FamilyAttempt& a : s.attempts) {
      if (a.result.verdict != Verdict::Found) continue;
      const Role& role = *std::find_if(std::begin(kRoles), std::end(kRoles),
                                       [&](const Role& r) { return r.family == a.family; });
      const CoordClass value = F[role.f] + F[role.g] * *a.result.p_value;
      EXPECT_EQ(deg_class(value), a.result.deg_after);
      EXPECT_LT(a.result.deg_after, a.result.deg_before);
      if (a.result.p->degree_x1() + a.result.p->degree_x2() <= 4) {
        EXPECT_EQ(*a.result.p_value, a.result.p->evaluate(F[role.g], F[role.h]));
      }
    }
    if (s.verdict == Verdict::Found) {
      ++found;
      if (support::word_growth(w) <= 9) {
        EXPECT_EQ(*s.reduced, compose(elem_to_autom(*s.letter), F));
      }
      EXPECT_LT(degree_aut(*s.reduced), degree_aut(F));
    }
  }
  EXPECT_GT(found, 30);
}

TEST(ReduceProperty, PartnerCoordinateGivesSameVerdict) {
  Rng rng(55);
  for (int k = 0; k < 40; ++k) {
    const Autom F = word_to_autom(support::random_bounded_word(rng, 3));
    for (const Role& r : kRoles) {
      const auto a = reduce_coordinate(F[r.f], F[r.g], F[r.h]);
      const auto b = reduce_coordinate(F[r.partner_f], F[r.partner_g], F[r.partner_h]);
      if (a.verdict == Verdict::Inconclusive || b.verdict == Verdict::Inconclusive) continue;
      EXPECT_EQ(a.verdict, b.verdict) << family_name(r.family) << " " << F.to_string();
      if (a.verdict == Verdict::Found) {
        // Both cancel with the same leading part v^w = -f^w / g^w; lower
        // terms of v are free.
        EXPECT_EQ(leading_class(*a.p_value), leading_class(*b.p_value));
      }
    }
  }
}

TEST(ReduceProperty, DecompositionRoundTrip) {
  Rng rng(56);
  for (int k = 0; k < 40; ++k) {
    const TameWord w = support::random_bounded_word(rng, 4);
    const Autom F = word_to_autom(w);
    const DecompositionResult d = decompose_tame(F);
    ASSERT_EQ(d.status, DecompositionStatus::Done) << w.to_string();
    TriDegree prev = degree_aut(F);
    for (const ReductionStep& step : d.steps) {
      EXPECT_EQ(step.deg_before, prev);
      EXPECT_LT(step.deg_after, step.deg_before);
      prev = step.deg_after;
    }
    EXPECT_EQ(word_to_autom(d.decomposition().replay_word()), F) << w.to_string();
  }
}
