#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace quadric {

/// A vector of Z^3 under the graded lexicographic order: coordinate sums are
/// compared first, ties are broken lexicographically. The order is
/// translation invariant, so differences of degrees can be compared too.
struct Tri {
  std::array<std::int64_t, 3> v{0, 0, 0};

  constexpr Tri() = default;
  constexpr Tri(std::int64_t a, std::int64_t b, std::int64_t c) : v{a, b, c} {}

  constexpr std::int64_t sum() const { return v[0] + v[1] + v[2]; }
  constexpr std::int64_t operator[](std::size_t k) const { return v[k]; }
  constexpr bool is_natural() const { return v[0] >= 0 && v[1] >= 0 && v[2] >= 0; }

  friend constexpr Tri operator+(Tri a, const Tri& b) {
    for (std::size_t k = 0; k < 3; ++k) a.v[k] += b.v[k];
    return a;
  }
  friend constexpr Tri operator-(Tri a, const Tri& b) {
    for (std::size_t k = 0; k < 3; ++k) a.v[k] -= b.v[k];
    return a;
  }
  friend constexpr Tri operator*(std::int64_t s, Tri a) {
    for (auto& x : a.v) x *= s;
    return a;
  }

  friend constexpr bool operator==(const Tri&, const Tri&) = default;
  friend constexpr std::strong_ordering operator<=>(const Tri& a, const Tri& b) {
    if (auto c = a.sum() <=> b.sum(); c != 0) return c;
    return a.v <=> b.v;
  }

  std::string to_string() const;
};

/// Element of N^3 ∪ {-inf}; the value of every degree computation.
/// -inf is below every triple and absorbs addition.
class TriDegree {
 public:
  constexpr TriDegree() = default;  // -inf
  constexpr TriDegree(const Tri& t) : finite_(true), value_(t) {}  // NOLINT
  constexpr TriDegree(std::int64_t a, std::int64_t b, std::int64_t c)
      : finite_(true), value_(a, b, c) {}

  static constexpr TriDegree minus_infinity() { return {}; }

  constexpr bool is_minus_infinity() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  /// The triple; only meaningful when finite.
  constexpr const Tri& value() const { return value_; }

  friend constexpr TriDegree operator+(const TriDegree& a, const TriDegree& b) {
    if (!a.finite_ || !b.finite_) return {};
    return TriDegree(a.value_ + b.value_);
  }

  friend constexpr bool operator==(const TriDegree& a, const TriDegree& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(const TriDegree& a, const TriDegree& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  /// "(a,b,c)" or "-inf".
  std::string to_string() const;

 private:
  bool finite_ = false;
  Tri value_{};
};

std::ostream& operator<<(std::ostream& os, const Tri& t);
std::ostream& operator<<(std::ostream& os, const TriDegree& d);

}  // namespace quadric
