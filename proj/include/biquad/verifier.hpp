#pragma once

// Exact certificates for the identities behind the tangent construction.

#include "biquad/bivar_poly.hpp"
#include "biquad/integer.hpp"
#include "biquad/quad_poly.hpp"
#include "biquad/richmond.hpp"
#include "biquad/solution.hpp"
#include "biquad/solution_file.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace biquad {

using Residual = std::variant<Integer, BivarPoly>;

inline Residual residual(const QuarticSolution& s) {
  return std::visit([](const auto& v) -> Residual { return residual(v); }, s);
}

inline bool residual_is_zero(const Residual& r) {
  return std::visit([](const auto& v) { return is_zero(v); }, r);
}

/// dividend = divisor * quotient, checked exactly when built.
struct DivisionCertificate {
  std::string name;
  QuadPoly dividend;
  QuadPoly divisor;
  QuadPoly quotient;

  bool reconstructs() const { return divisor * quotient == dividend; }

  Certificate to_certificate() const {
    return {name, {{"dividend", dividend}, {"divisor", divisor}, {"quotient", quotient}}};
  }
};

/// Re-checks a certificate read from a file: divisor * quotient = dividend.
inline bool check_certificate(const Certificate& cert) {
  return cert.section("divisor") * cert.section("quotient") == cert.section("dividend");
}

/// For the generic point, X_b^4 + Y_b^4 - Z_b^4 - W_b^4 of the branch-b
/// closed forms divided exactly by X^4 + Y^4 - Z^4 - W^4.
inline DivisionCertificate divisibility_certificate(Branch b) {
  const auto image = raw_transform(generic_point(), b);
  DivisionCertificate cert{std::string("divisibility-") + to_string(b), residual(image), surface_form(), {}};
  try {
    cert.quotient = exact_div(cert.dividend, cert.divisor);
  } catch (const std::domain_error&) {
    throw std::domain_error("identity falsified: residual of the closed forms is not divisible");
  }
  return cert;
}

/// 64 X^4 Y^4 Z^4 W^4 (W^4 - Z^4)^2
template <class R>
R discriminant_closed_form(const Solution<R>& s) {
  const detail::Powers<R> pw(s);
  const R diff = pw.w4 - pw.z4;
  return detail::scaled<R>(pw.x4 * pw.y4 * pw.z4 * pw.w4 * diff * diff, 64);
}

/// B^2 - 4AC of the tangent quadratic.
template <class R>
R tangent_discriminant(const Solution<R>& s) {
  const auto q = tangent_quadratic(s);
  return q.b * q.b - detail::scaled<R>(q.a * q.c, 4);
}

/// (B^2 - 4AC) - 64 X^4 Y^4 Z^4 W^4 (W^4 - Z^4)^2 for the generic point,
/// divided exactly by X^4 + Y^4 - Z^4 - W^4. The common factor q^2 is left out.
inline DivisionCertificate discriminant_congruence() {
  const auto g = generic_point();
  DivisionCertificate cert{"discriminant", tangent_discriminant(g) - discriminant_closed_form(g), surface_form(), {}};
  try {
    cert.quotient = exact_div(cert.dividend, cert.divisor);
  } catch (const std::domain_error&) {
    throw std::domain_error("discriminant identity falsified: difference is not divisible");
  }
  return cert;
}

struct DegreeParityReport {
  std::size_t degree = 0;
  bool even = false;
  /// Index of the first nonzero coefficient of each component (the power of v
  /// it carries); equal to degree + 1 for a zero component.
  std::array<std::size_t, 4> first_nonzero{};
  bool trivial = false;
};

inline DegreeParityReport degree_parity_report(const ParametricSolution& s) {
  const auto n = normalize(s);
  const auto degree = formal_degree(n);
  DegreeParityReport r;
  r.degree = *degree;
  r.even = r.degree % 2 == 0;
  const std::array<const BivarPoly*, 4> comps{&n.x, &n.y, &n.z, &n.w};
  for (std::size_t i = 0; i < 4; ++i) {
    r.first_nonzero[i] = comps[i]->is_zero() ? r.degree + 1 : comps[i]->leading_zeros();
  }
  r.trivial = is_trivial(n);
  return r;
}

inline DegreeParityReport degree_parity_report(const QuarticSolution& s) {
  const auto* p = std::get_if<ParametricSolution>(&s);
  if (p == nullptr) throw std::invalid_argument("degree report needs a parametric solution");
  return degree_parity_report(*p);
}

}  // namespace biquad
