#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadric/analysis.hpp"
#include "quadric/autom.hpp"

namespace quadric {

struct SearchBudget {
  /// Cap on the coordinate sum of ged P, used only when the parachute bound
  /// on the search is vacuous.
  unsigned max_ged_sum = 40;
  /// Cap on the number of distinct weight levels cancelled in one solve.
  unsigned max_cancellation_rounds = 64;

  /// Throws InvariantError unless both caps are positive.
  void validate() const;
};

enum class Verdict { Found, NotFound, Inconclusive };
std::string verdict_name(Verdict v);

enum class ObstructionKind {
  None,
  /// deg f - deg g is not in N^3, so no g * P(g, h) can reach deg f.
  DegreeIncrease,
  /// Leading classes are monomials without x1x4 interference and the
  /// exponent system target = sum c_k gens_k has no solution in N.
  Monomial,
  /// The exact cancellation system over every admissible (i, j) is
  /// inconsistent.
  Linear,
  /// The search box was cut by the budget.
  BudgetExhausted,
};
std::string obstruction_name(ObstructionKind k);

/// Exponent system for a monomial obstruction; the target may have
/// negative entries, in which case it is trivially unsolvable.
struct ExponentSystem {
  std::array<std::int64_t, 4> target{};
  std::vector<Monomial> generators;
};

struct Obstruction {
  ObstructionKind kind = ObstructionKind::None;
  std::optional<ExponentSystem> system;
  std::string detail;

  /// A finished proof rather than an exhausted budget.
  bool is_proof() const;
};

struct CoordinateReduction {
  Verdict verdict = Verdict::NotFound;
  /// Set for Found: P, its generic degree, and the class P(g, h).
  std::optional<BivarPoly> p;
  TriDegree ged_p;
  std::optional<CoordClass> p_value;
  Obstruction obstruction;
  TriDegree deg_before;
  /// deg(f + g P(g, h)) for Found.
  TriDegree deg_after;
  std::size_t unknowns = 0;
  std::size_t rounds = 0;
};

/// Searches P with deg(f + g P(g, h)) < deg f by exact cancellation of all
/// weight levels >= deg f. Throws DependentInputs when every j_k(g, h)
/// vanishes and ZeroInput / InvariantError on zero f or constant g, h.
CoordinateReduction reduce_coordinate(const CoordClass& f, const CoordClass& g, const CoordClass& h,
                                      const SearchBudget& budget = {});

/// target = sum c_k gens_k with c_k in N.
bool monomial_subalgebra_member(const Monomial& target, const std::vector<Monomial>& gens);

struct FamilyAttempt {
  Family family;
  CoordinateReduction result;
};

struct ElementarySearch {
  Verdict verdict = Verdict::NotFound;
  std::optional<ElementaryAutom> letter;
  /// letter o F, for Found.
  std::optional<Autom> reduced;
  /// One entry per family, in the order E13, E24, E12, E34.
  std::vector<FamilyAttempt> attempts;
};

/// Tries all four families with a = b = 1. Among the families that reduce,
/// the one with the least ged P wins; ties go to the order E13, E24, E12,
/// E34.
ElementarySearch find_elementary_reduction(const Autom& F, const SearchBudget& budget = {});

struct ReductionStep {
  ElementaryAutom letter;
  TriDegree deg_before;
  TriDegree deg_after;
};

struct Decomposition {
  std::vector<ReductionStep> steps;
  OrthogonalAutom terminal;

  /// E_0^-1 * ... * E_{m-1}^-1 * terminal, whose value is the input map.
  TameWord replay_word() const;
};

struct FamilyEvidence {
  Family family;
  Obstruction obstruction;
};

struct WildCertificate {
  /// deg of the automorphism that admits no elementary reduction.
  TriDegree degree;
  std::vector<FamilyEvidence> families;

  bool is_conclusive() const;
};

enum class DecompositionStatus { Done, Stuck, Inconclusive };

struct DecompositionResult {
  DecompositionStatus status = DecompositionStatus::Inconclusive;
  /// Steps taken so far; complete for Done.
  std::vector<ReductionStep> steps;
  std::optional<OrthogonalAutom> terminal;
  std::optional<WildCertificate> certificate;
  /// For Inconclusive, the attempts at the point where the search stopped.
  std::vector<FamilyAttempt> open_attempts;

  /// Requires status Done.
  Decomposition decomposition() const;
};

DecompositionResult decompose_tame(const Autom& F, const SearchBudget& budget = {});

enum class WildVerdict { Wild, Tame, Inconclusive };
std::string wild_verdict_name(WildVerdict v);

struct WildCheck {
  WildVerdict verdict = WildVerdict::Inconclusive;
  DecompositionResult detail;
};

WildCheck certify_wild(const Autom& F, const SearchBudget& budget = {});

}  // namespace quadric
