#pragma once

// Quadruples (x, y, z, w) on the surface x^4 + y^4 = z^4 + w^4.
//
// Solution<R> is generic over the coordinate ring: Integer for numeric
// solutions, BivarPoly for parametric ones, QuadPoly for the generic point
// used by the symbolic certificates.

#include "biquad/bivar_poly.hpp"
#include "biquad/integer.hpp"
#include "biquad/quad_poly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace biquad {

template <class R>
struct Solution {
  R x, y, z, w;
  /// Set once the residual has been confirmed zero.
  bool verified = false;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
  }
};

using NumericSolution = Solution<Integer>;
using ParametricSolution = Solution<BivarPoly>;
using QuarticSolution = std::variant<NumericSolution, ParametricSolution>;

template <class R>
concept Ring = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
};

/// The generic point (X, Y, Z, W).
inline Solution<QuadPoly> generic_point() { return {QuadPoly::X(), QuadPoly::Y(), QuadPoly::Z(), QuadPoly::W()}; }

inline NumericSolution numeric(long x, long y, long z, long w) {
  return {Integer(x), Integer(y), Integer(z), Integer(w)};
}

/// Shared formal degree of the nonzero components; throws when they differ.
inline std::optional<std::size_t> formal_degree(const ParametricSolution& s) {
  std::optional<std::size_t> degree;
  for (const BivarPoly* p : {&s.x, &s.y, &s.z, &s.w}) {
    if (p->is_zero()) continue;
    if (degree && *degree != p->degree()) throw std::domain_error("components have mixed formal degrees");
    degree = p->degree();
  }
  return degree;
}

template <Ring R>
R fourth_power(const R& a) {
  if constexpr (std::is_same_v<R, Integer>) {
    return pow_ui(a, 4);
  } else {
    const R sq = a * a;
    return sq * sq;
  }
}

/// x^4 + y^4 - z^4 - w^4
template <Ring R>
R residual(const Solution<R>& s) {
  R r = fourth_power(s.x);
  r = r + fourth_power(s.y);
  r = r - fourth_power(s.z);
  r = r - fourth_power(s.w);
  return r;
}

template <Ring R>
bool is_zero(const R& r) {
  if constexpr (std::is_same_v<R, Integer>) {
    return r == 0;
  } else {
    return r.is_zero();
  }
}

/// Returns s with the verified flag set; throws if its residual is nonzero.
template <Ring R>
Solution<R> verify(Solution<R> s) {
  if (!s.verified) {
    if constexpr (std::is_same_v<R, BivarPoly>) formal_degree(s);
    if (!is_zero(residual(s))) throw std::domain_error("not a solution: residual is nonzero");
    s.verified = true;
  }
  return s;
}

/// Substitutes the components of s for X, Y, Z, W in f.
inline BivarPoly compose(const QuadPoly& f, const ParametricSolution& s) {
  return compose(f, std::array<const BivarPoly*, 4>{&s.x, &s.y, &s.z, &s.w});
}

/// Numeric specialization of a parametric solution at (u, v).
inline NumericSolution eval_at(const ParametricSolution& s, const Integer& u, const Integer& v) {
  return {eval_at(s.x, u, v), eval_at(s.y, u, v), eval_at(s.z, u, v), eval_at(s.w, u, v), s.verified};
}

inline std::string to_string(const NumericSolution& s) {
  return "(" + to_string(s.x) + ", " + to_string(s.y) + ", " + to_string(s.z) + ", " + to_string(s.w) + ")";
}

}  // namespace biquad
