#pragma once

// Tangent-plane construction of new points on x^4 + y^4 = z^4 + w^4.
//
// Given a point P = (X, Y, Z, W) on the surface, a second point is written
// as (pX, qY, rZ, sW). Requiring it to lie on the tangent plane at P and on
// an inflectional tangent there, with p + q + r + s = 0, leaves a quadratic
// A p^2 + B pq + C q^2 = 0 whose two rational roots each give a new
// solution. All routines are templates over the coordinate ring, so the same
// code runs on integers, on parametric forms and on the generic point.

#include "biquad/bivar_poly.hpp"
#include "biquad/integer.hpp"
#include "biquad/quad_poly.hpp"
#include "biquad/solution.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace biquad {

/// Which root of the tangent quadratic is taken. `plus` carries
/// +4W^2X^2Y^2Z^2(W^4 - Z^4) in the new X coordinate, `minus` the opposite sign.
enum class Branch { plus, minus };

inline const char* to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

template <class R>
struct TangentQuadratic {
  R a, b, c;
};

/// Multipliers of the new point (pX, qY, rZ, sW), denominators cleared.
template <class R>
struct ScaledPoint {
  R p, q, r, s;
};

template <class R>
struct RootPair {
  R p, q;
};

template <class R>
struct TangentPlaneRS {
  R r, s, denom;
};

namespace detail {

template <class R>
R scaled(const R& a, long k) {
  R r = a;
  r *= Integer(k);
  return r;
}

// Even powers of the coordinates shared by every formula below.
template <class R>
struct Powers {
  R x2, y2, z2, w2;
  R x4, y4, z4, w4;

  explicit Powers(const Solution<R>& s)
      : x2(s.x * s.x), y2(s.y * s.y), z2(s.z * s.z), w2(s.w * s.w),
        x4(x2 * x2), y4(y2 * y2), z4(z2 * z2), w4(w2 * w2) {}
};

template <class R>
void require_verified(const Solution<R>& s) {
  if constexpr (!std::is_same_v<R, QuadPoly>) {
    if (!s.verified) throw std::invalid_argument("solution must be verified first");
  }
}

// (W^4 + Z^4)T^8 - (W^8 - 6W^4Z^4 + Z^8)T^4 + W^4Z^4(W^4 + Z^4), T = X or Y.
template <class R>
R quadratic_outer(const Powers<R>& pw, const R& t4) {
  const R wz = pw.w4 + pw.z4;
  const R w4z4 = pw.w4 * pw.z4;
  const R mid = pw.w4 * pw.w4 - scaled<R>(w4z4, 6) + pw.z4 * pw.z4;
  return wz * (t4 * t4) - mid * t4 + w4z4 * wz;
}

// (W^4Y^4 + 2W^4Z^4 + Y^4Z^4)X^4 + W^4Z^4(W^4 + 2Y^4 + Z^4), i.e. B/2.
template <class R>
R half_middle(const Powers<R>& pw) {
  const R w4z4 = pw.w4 * pw.z4;
  const R k = pw.w4 * pw.y4 + scaled<R>(w4z4, 2) + pw.y4 * pw.z4;
  return k * pw.x4 + w4z4 * (pw.w4 + scaled<R>(pw.y4, 2) + pw.z4);
}

// 4W^2X^2Y^2Z^2(W^4 - Z^4), half the square root of the discriminant.
template <class R>
R half_root(const Powers<R>& pw) {
  return scaled<R>(pw.w2 * pw.x2 * pw.y2 * pw.z2 * (pw.w4 - pw.z4), 4);
}

}  // namespace detail

/// Coefficients A, B, C of A p^2 + B pq + C q^2 = 0.
template <class R>
TangentQuadratic<R> tangent_quadratic(const Solution<R>& s) {
  detail::require_verified(s);
  const detail::Powers<R> pw(s);
  return {detail::quadratic_outer(pw, pw.x4), detail::scaled<R>(detail::half_middle(pw), 2),
          detail::quadratic_outer(pw, pw.y4)};
}

/// Both roots of the tangent quadratic as (p, q) = (-(B/2 +- sqrt(D)/2), A).
/// The first entry is the `plus` root.
template <class R>
std::array<RootPair<R>, 2> inflectional_roots(const Solution<R>& s) {
  detail::require_verified(s);
  const detail::Powers<R> pw(s);
  R a = detail::quadratic_outer(pw, pw.x4);
  if (is_zero(a)) throw std::domain_error("degenerate quadratic: leading coefficient is zero");
  const R mid = detail::half_middle(pw);
  const R root = detail::half_root(pw);
  return {RootPair<R>{-(mid + root), a}, RootPair<R>{-(mid - root), a}};
}

template <class R>
const RootPair<R>& root_for(const std::array<RootPair<R>, 2>& roots, Branch b) {
  return roots[b == Branch::plus ? 0 : 1];
}

/// Solves the tangent-plane and p + q + r + s = 0 conditions for r and s;
/// both share the denominator W^4 - Z^4.
template <class R>
TangentPlaneRS<R> tangent_plane_rs(const Solution<R>& s, const R& p, const R& q) {
  detail::require_verified(s);
  const detail::Powers<R> pw(s);
  R denom = pw.w4 - pw.z4;
  if (is_zero(denom)) throw std::domain_error("tangent construction degenerate: W^4 = Z^4");
  R r = -((pw.x4 + pw.w4) * p + (pw.w4 + pw.y4) * q);
  R s_num = (pw.x4 + pw.z4) * p + (pw.y4 + pw.z4) * q;
  return {std::move(r), std::move(s_num), std::move(denom)};
}

/// The chain roots -> (r, s) assembled into (p*d, q*d, r, s).
template <class R>
ScaledPoint<R> scaled_point(const Solution<R>& s, Branch b) {
  const auto roots = inflectional_roots(s);
  const auto& [p, q] = root_for(roots, b);
  auto rs = tangent_plane_rs(s, p, q);
  return {p * rs.denom, q * rs.denom, std::move(rs.r), std::move(rs.s)};
}

/// The new point (pX, qY, rZ, sW).
template <class R>
Solution<R> apply_scaled_point(const Solution<R>& s, const ScaledPoint<R>& m) {
  return {m.p * s.x, m.q * s.y, m.r * s.z, m.s * s.w};
}

/// Closed-form new solution for the chosen branch, before any reduction.
/// No verification is required: the generic point is a valid input.
template <class R>
Solution<R> raw_transform(const Solution<R>& s, Branch b) {
  const detail::Powers<R> pw(s);
  const long sign = b == Branch::plus ? 1 : -1;
  const R x6 = pw.x4 * pw.x2;
  const R x8 = pw.x4 * pw.x4;
  const R y4z4 = pw.y4 * pw.z4;
  const R w4y4z4 = pw.w4 * y4z4;
  const R w2y2z2 = pw.w2 * pw.y2 * pw.z2;

  R nx = detail::half_middle(pw) + detail::scaled<R>(detail::half_root(pw), sign);
  R ny = detail::quadratic_outer(pw, pw.x4);

  const R z_mid = pw.w4 * pw.w4 + detail::scaled<R>(pw.w4 * pw.y4, 2) - detail::scaled<R>(pw.w4 * pw.z4, 2) - y4z4;
  R nz = pw.w4 * x8 - detail::scaled<R>(w2y2z2 * x6, 4 * sign) - z_mid * pw.x4 -
         detail::scaled<R>(pw.w4 * w2y2z2 * pw.x2, 4 * sign) - w4y4z4;

  const R w_mid = pw.w4 * pw.y4 + detail::scaled<R>(pw.w4 * pw.z4, 2) - detail::scaled<R>(y4z4, 2) - pw.z4 * pw.z4;
  R nw = pw.z4 * x8 + detail::scaled<R>(w2y2z2 * x6, 4 * sign) + w_mid * pw.x4 +
         detail::scaled<R>(w2y2z2 * pw.z4 * pw.x2, 4 * sign) - w4y4z4;

  return {s.x * nx, s.y * ny, s.z * nz, s.w * nw};
}

// ---------------------------------------------------------------------------
// Normalization

/// Form with its first nonzero coefficient made positive.
inline BivarPoly positive_leading(const BivarPoly& p) {
  return (!p.is_zero() && p.leading_coefficient() < 0) ? -p : p;
}

inline Integer positive_leading(const Integer& a) { return abs(a); }

/// Componentwise sign canonicalization; harmless since only fourth powers matter.
template <class R>
Solution<R> canonical_signs(const Solution<R>& s) {
  return {positive_leading(s.x), positive_leading(s.y), positive_leading(s.z), positive_leading(s.w), s.verified};
}

/// Divides out the GCD of the four integers and makes every entry non-negative.
inline NumericSolution normalize(const NumericSolution& s) {
  Integer g = 0;
  for (const Integer* c : {&s.x, &s.y, &s.z, &s.w}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c->get_mpz_t());
  if (g == 0) throw std::domain_error("cannot normalize the all-zero quadruple");
  NumericSolution r{exact_quotient(s.x, g), exact_quotient(s.y, g), exact_quotient(s.z, g),
                    exact_quotient(s.w, g), s.verified};
  return canonical_signs(r);
}

/// Divides out the common form factor and integer content of the four
/// components, then fixes signs. Idempotent.
inline ParametricSolution normalize(const ParametricSolution& s) {
  formal_degree(s);
  std::array<const BivarPoly*, 4> comps{&s.x, &s.y, &s.z, &s.w};
  std::vector<const BivarPoly*> nonzero;
  for (const BivarPoly* p : comps) {
    if (!p->is_zero()) nonzero.push_back(p);
  }
  if (nonzero.empty()) throw std::domain_error("cannot normalize the all-zero quadruple");
  // Cheapest pair first keeps the pseudo-remainder sequences short.
  std::sort(nonzero.begin(), nonzero.end(),
            [](const BivarPoly* a, const BivarPoly* b) { return a->degree() < b->degree(); });

  BivarPoly g = content_primitive(*nonzero.front()).primitive;
  for (std::size_t i = 1; i < nonzero.size() && g.degree() > 0; ++i) g = gcd(g, *nonzero[i]);

  std::array<BivarPoly, 4> reduced;
  for (std::size_t i = 0; i < 4; ++i) reduced[i] = exact_div(*comps[i], g);

  Integer c = 0;
  for (const auto& p : reduced) {
    if (p.is_zero()) continue;
    const Integer pc = content(p.coefficients());
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), pc.get_mpz_t());
  }
  if (c != 1) {
    for (auto& p : reduced) {
      if (p.is_zero()) continue;
      std::vector<Integer> coeffs(p.coefficients().begin(), p.coefficients().end());
      for (auto& k : coeffs) k = exact_quotient(k, c);
      p = BivarPoly(std::move(coeffs));
    }
  }
  return canonical_signs(ParametricSolution{std::move(reduced[0]), std::move(reduced[1]), std::move(reduced[2]),
                                            std::move(reduced[3]), s.verified});
}

inline QuarticSolution normalize(const QuarticSolution& s) {
  return std::visit([](const auto& v) -> QuarticSolution { return normalize(v); }, s);
}

/// New solution on the chosen branch, reduced by normalize and verified.
template <class R>
Solution<R> transform(const Solution<R>& s, Branch b) {
  detail::require_verified(s);
  return verify(normalize(raw_transform(s, b)));
}

// ---------------------------------------------------------------------------
// Triviality and symmetry

/// True iff {|x|, |y|} = {|z|, |w|} as multisets (up to sign for forms).
template <class R>
bool is_trivial(const Solution<R>& s) {
  const auto c = canonical_signs(s);
  return (c.x == c.z && c.y == c.w) || (c.x == c.w && c.y == c.z);
}

/// The 64 images of s under sign changes and the x<->y, z<->w interchanges.
/// Order: swap_xy outermost, then swap_zw, then the sign mask (bit i negates
/// component i).
template <class R>
std::vector<Solution<R>> symmetry_variants(const Solution<R>& s) {
  std::vector<Solution<R>> out;
  out.reserve(64);
  for (int swap_xy = 0; swap_xy < 2; ++swap_xy) {
    for (int swap_zw = 0; swap_zw < 2; ++swap_zw) {
      Solution<R> base = s;
      if (swap_xy) std::swap(base.x, base.y);
      if (swap_zw) std::swap(base.z, base.w);
      for (unsigned mask = 0; mask < 16; ++mask) {
        Solution<R> v = base;
        if (mask & 1u) v.x = -v.x;
        if (mask & 2u) v.y = -v.y;
        if (mask & 4u) v.z = -v.z;
        if (mask & 8u) v.w = -v.w;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

/// True iff normalize(b) = normalize(v) for some symmetry variant v of a.
template <class R>
bool equivalent(const Solution<R>& a, const Solution<R>& b) {
  detail::require_verified(a);
  detail::require_verified(b);
  // normalize commutes with signed permutations up to its own sign fixing,
  // so normalizing a once and re-fixing signs per variant is the same test.
  const auto na = normalize(a);
  const auto nb = normalize(b);
  for (const auto& v : symmetry_variants(na)) {
    if (canonical_signs(v) == nb) return true;
  }
  return false;
}

inline bool equivalent(const QuarticSolution& a, const QuarticSolution& b) {
  if (a.index() != b.index()) throw std::invalid_argument("cannot compare numeric and parametric solutions");
  return std::visit(
      [&b](const auto& va) {
        using T = std::decay_t<decltype(va)>;
        return equivalent(va, std::get<T>(b));
      },
      a);
}

}  // namespace biquad
