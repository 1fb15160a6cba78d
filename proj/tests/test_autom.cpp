#include <gtest/gtest.h>

#include "quadric/error.hpp"
#include "quadric/parser.hpp"
#include "test_support.hpp"

using namespace quadric;
using quadric::support::Rng;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial x(int k) { return Polynomial::variable(k); }

Autom quad(const char* a, const char* b, const char* c, const char* d) {
  return Autom::make(std::array<Polynomial, 4>{P(a), P(b), P(c), P(d)});
}

bool preserves_quadric(const Autom& F) {
  return nf_coord(F[1].rep() * F[4].rep() - F[2].rep() * F[3].rep()).rep() == Polynomial(1);
}

/// Entries of left * Y * right with Y = X or X^T, expanded by hand.
std::array<Polynomial, 4> linear_oracle(const Mat2& l, const Mat2& r, bool transpose) {
  const Polynomial y11 = x(1), y12 = transpose ? x(3) : x(2), y21 = transpose ? x(2) : x(3), y22 = x(4);
  const Polynomial m11 = l.a * y11 + l.b * y21, m12 = l.a * y12 + l.b * y22;
  const Polynomial m21 = l.c * y11 + l.d * y21, m22 = l.c * y12 + l.d * y22;
  return {r.a * m11 + r.c * m12, r.b * m11 + r.d * m12, r.a * m21 + r.c * m22, r.b * m21 + r.d * m22};
}

}  // namespace

TEST(Elementary, DisplayedFormulas) {
  const Polynomial h = P("x1^2 - 3*x2");
  EXPECT_EQ(elem_to_autom(ElementaryAutom::make(Family::E34, 1, 1, h)),
            Autom::make(std::array<Polynomial, 4>{x(1), x(2), x(3) + x(1) * h, x(4) + x(2) * h}));
  EXPECT_EQ(elem_to_autom(ElementaryAutom::make(Family::E13, 1, 1, Polynomial())), Autom::identity());
  const Polynomial p = P("x2*x4 + 2");
  EXPECT_EQ(elem_to_autom(ElementaryAutom::make(Family::E13, 1, 1, p)),
            Autom::make(std::array<Polynomial, 4>{x(1) + x(2) * p, x(2), x(3) + x(4) * p, x(4)}));
}

TEST(Elementary, RejectsInvalidParameters) {
  EXPECT_THROW(ElementaryAutom::make(Family::E34, 0, 1, Polynomial()), InvariantError);
  EXPECT_THROW(ElementaryAutom::make(Family::E34, 1, 0, Polynomial()), InvariantError);
  EXPECT_THROW(ElementaryAutom::make(Family::E34, 1, 1, x(3)), InvariantError);
  EXPECT_THROW(ElementaryAutom::make(Family::E13, 1, 1, x(1)), InvariantError);
  EXPECT_NO_THROW(ElementaryAutom::make(Family::E24, 2, 3, P("x1*x3")));
}

TEST(Orthogonal, Examples) {
  EXPECT_EQ(orth_to_autom(OrthogonalAutom::transposition()), quad("x1", "x3", "x2", "x4"));
  const Scalar a(3);
  const auto diag = OrthogonalAutom::make({}, SL2Matrix::make(a, 0, 0, a.inverse()), false);
  EXPECT_EQ(orth_to_autom(diag), quad("3*x1", "x2/3", "3*x3", "x4/3"));
  EXPECT_EQ(orth_to_autom(OrthogonalAutom::make({}, {}, false)), Autom::identity());
  EXPECT_THROW(SL2Matrix::make(1, 1, 1, 1), InvariantError);
}

TEST(Autom, RejectsNonAutomorphisms) {
  EXPECT_THROW(quad("x1", "x2", "x3", "2*x4"), NotAnAutomorphism);
  EXPECT_THROW(quad("1", "0", "0", "1"), NotAnAutomorphism);
  EXPECT_NO_THROW(quad("x1", "x2", "x3", "x4"));
}

TEST(Autom, CompositionExamples) {
  const Autom F = sigma_n(1);
  EXPECT_EQ(compose(F, Autom::identity()), F);
  EXPECT_EQ(compose(Autom::identity(), F), F);
  const Polynomial h = P("x1*x2 - 2");
  EXPECT_EQ(compose(elem_to_autom(ElementaryAutom::make(Family::E34, 1, 1, h)),
                    elem_to_autom(ElementaryAutom::make(Family::E34, 1, 1, -h))),
            Autom::identity());
  // (F o G)(x) = F(G(x)): the first coordinate of E13(x2) o E34(x1) is
  // x1 + x2 * x2', evaluated at E34's coordinates.
  const Autom e13 = elem_to_autom(ElementaryAutom::make(Family::E13, 1, 1, x(2)));
  const Autom e34 = elem_to_autom(ElementaryAutom::make(Family::E34, 1, 1, x(1)));
  EXPECT_EQ(compose(e13, e34)[1].rep(), P("x1 + x2^2"));
  EXPECT_EQ(compose(e34, e13)[3].rep(), nf_coord(P("(x3 + x4*x2) + (x1 + x2^2)^2")).rep());
}

TEST(Autom, DegreeExamples) {
  EXPECT_EQ(degree_aut(Autom::identity()), TriDegree(2, 2, 2));
  EXPECT_EQ(degree_aut(sigma_n(1)), TriDegree(0, 8, 4));
  EXPECT_EQ(degree_aut(orth_to_autom(OrthogonalAutom::transposition())), TriDegree(2, 2, 2));
}

TEST(Autom, VerifyExamples) {
  EXPECT_TRUE(verify_automorphism(Autom::identity(), Autom::identity()));
  EXPECT_TRUE(verify_automorphism(sigma_n(1), sigma_n_inverse(1)));
  const Autom t = orth_to_autom(OrthogonalAutom::transposition());
  EXPECT_TRUE(verify_automorphism(t, t));
  EXPECT_FALSE(verify_automorphism(sigma_n(1), sigma_n(1)));
}

TEST(Sigma, DisplayAndLeadingClasses) {
  EXPECT_EQ(sigma_n(2)[1].rep(), nf_coord(P("x1 - x2*(x1+x4)^2")).rep());
  for (unsigned n = 1; n <= 4; ++n) {
    const Autom s = sigma_n(n);
    const Polynomial x4n = x(4).pow(n);
    EXPECT_EQ(leading_class(s[1]).rep(), -(x(2) * x4n));
    EXPECT_EQ(leading_class(s[2]).rep(), x(2));
    EXPECT_EQ(leading_class(s[3]).rep(), -(x(2) * x4n * x4n));
    EXPECT_EQ(leading_class(s[4]).rep(), x(2) * x4n);
    EXPECT_TRUE(verify_automorphism(s, sigma_n_inverse(n)));
  }
  EXPECT_THROW(sigma_n(0), InvariantError);
}

TEST(ExpTrace, Examples) {
  EXPECT_EQ(exp_trace_lnd(Polynomial()), Autom::identity());
  EXPECT_EQ(exp_trace_lnd(Polynomial(1)), quad("x1 - x2", "x2", "x3 + x1 - x4 - x2", "x4 + x2"));
  const Autom e = exp_trace_lnd(P("x2^3"));
  EXPECT_EQ(e[2].rep(), x(2));
  EXPECT_EQ((e[1] + e[4]).rep(), x(1) + x(4));
  EXPECT_EQ(exp_trace_lnd(P("x2^2 - 1")), lnd_exponential(P("x2^2 - 1")));
  EXPECT_THROW(exp_trace_lnd(x(1)), InvariantError);
}

TEST(Words, Examples) {
  EXPECT_EQ(word_to_autom(TameWord{}), Autom::identity());
  TameWord tt;
  tt.letters = {OrthogonalAutom::transposition(), OrthogonalAutom::transposition()};
  EXPECT_EQ(word_to_autom(tt), Autom::identity());
  const TameWord w = exp_trace_lnd_word(P("x2"));
  EXPECT_EQ(word_to_autom(w), lnd_exponential(P("x2")));
  EXPECT_EQ(w.to_string(), "E34(a=1,b=1,h=x2) * E13(a=1,b=1,h=-x2)");
}

TEST(AutomProperty, ElementaryInverses) {
  Rng rng(31);
  for (int k = 0; k < 150; ++k) {
    const ElementaryAutom e = support::random_elementary(rng);
    const Autom f = elem_to_autom(e);
    const Autom g = elem_to_autom(e.inverse());
    EXPECT_TRUE(verify_automorphism(f, g)) << e.to_string();
    EXPECT_EQ(e.inverse().inverse(), e);
  }
}

TEST(AutomProperty, OrthogonalElements) {
  Rng rng(32);
  for (int k = 0; k < 150; ++k) {
    const Mat2 l = support::random_sl2_mat(rng);
    const Mat2 r = support::random_sl2_mat(rng);
    const bool t = support::coin(rng);
    const OrthogonalAutom o = OrthogonalAutom::make(SL2Matrix::make(l), SL2Matrix::make(r), t);
    const auto lin = o.linear_quadruple();
    EXPECT_EQ(substitute(determinant_form(), lin), determinant_form());
    EXPECT_EQ(lin, linear_oracle(l, r, t));
    const Autom F = orth_to_autom(o);
    EXPECT_TRUE(verify_automorphism(F, orth_to_autom(o.inverse())));
    const auto back = as_orthogonal(F);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(orth_to_autom(*back), F);
  }
}

TEST(AutomProperty, FactorsWithoutSquareRoots) {
  // det(left) = 2 has no square root in Q(i); the scale factor absorbs it.
  Rng rng(33);
  for (int k = 0; k < 50; ++k) {
    const Scalar d = support::random_unit(rng);
    const Mat2 l = Mat2::diag(d, 1) * support::random_sl2_mat(rng);
    const Mat2 r = support::random_sl2_mat(rng) * Mat2::diag(1, d.inverse());
    const bool t = support::coin(rng);
    const OrthogonalAutom o = OrthogonalAutom::from_factors(l, r, t);
    EXPECT_EQ(o.linear_quadruple(), linear_oracle(l, r, t));
    EXPECT_EQ(substitute(determinant_form(), o.linear_quadruple()), determinant_form());
  }
}

TEST(AutomProperty, StructureOfGeneratedAutomorphisms) {
  Rng rng(34);
  for (int k = 0; k < 60; ++k) {
    const TameWord w = support::random_bounded_word(rng, 3);
    const Autom F = word_to_autom(w);
    EXPECT_TRUE(preserves_quadric(F));
    EXPECT_TRUE(half_degree_identity(F)) << w.to_string();
    // F o F^-1 roughly squares coordinate size; keep that check to small words.
    if (support::word_growth(w) <= 4) {
      EXPECT_TRUE(verify_automorphism(F, word_to_autom(w.inverse())));
    }
    const Scalar a = support::random_unit(rng);
    const Scalar b = support::random_unit(rng);
    for (const Autom& G : {scale_coordinates(F, a, b), right_diagonal(F, a), right_antidiagonal(F, a)}) {
      EXPECT_EQ(degree_aut(G), degree_aut(F));
      EXPECT_TRUE(preserves_quadric(G));
    }
  }
}
