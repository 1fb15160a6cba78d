#pragma once

#include <optional>
#include <vector>

#include "quadric/scalar.hpp"

namespace quadric::linalg {

using Matrix = std::vector<std::vector<Scalar>>;

/// Solves a x = b exactly over Q(i) by reduced row echelon form with
/// pivots taken in the leftmost possible columns; free variables are set
/// to zero. The returned solution therefore only uses the lexicographically
/// first basis of the column space, i.e. it avoids later columns whenever
/// earlier ones suffice. Returns nullopt when the system is inconsistent.
/// `a` has b.size() rows of `cols` entries each.
std::optional<std::vector<Scalar>> solve_leftmost(Matrix a, std::vector<Scalar> b, std::size_t cols);

std::size_t rank(Matrix a);

}  // namespace quadric::linalg
