#pragma once

// Homogeneous bivariate polynomials over the integers.
//
// A form of degree n is stored as its coefficient list (c0, ..., cn), where
// ck multiplies u^(n-k) v^k. The list keeps leading and trailing zeros, so
// the homogeneity degree is carried explicitly rather than inferred. The zero
// polynomial is a separate state with no degree.

#include "biquad/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace biquad {

class BivarPoly {
 public:
  /// The zero polynomial.
  BivarPoly() = default;

  /// Form of degree coeffs.size()-1. An all-zero list yields the zero polynomial.
  explicit BivarPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; })) {
      coeffs_.clear();
    }
  }

  BivarPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    *this = BivarPoly(std::move(coeffs_));
  }

  static BivarPoly constant(const Integer& c) { return BivarPoly(std::vector<Integer>{c}); }

  /// u^i v^j
  static BivarPoly monomial(std::size_t i, std::size_t j, const Integer& c = 1) {
    std::vector<Integer> coeffs(i + j + 1);
    coeffs[j] = c;
    return BivarPoly(std::move(coeffs));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::size_t degree() const {
    if (is_zero()) throw std::domain_error("degree undefined for zero polynomial");
    return coeffs_.size() - 1;
  }

  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Index of the first nonzero coefficient (the power of v dividing the form).
  std::size_t leading_zeros() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no nonzero coefficient");
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
  }

  /// Number of zero coefficients at the end (the power of u dividing the form).
  std::size_t trailing_zeros() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no nonzero coefficient");
    std::size_t k = 0;
    while (coeffs_[coeffs_.size() - 1 - k] == 0) ++k;
    return k;
  }

  /// First nonzero coefficient in list order.
  const Integer& leading_coefficient() const { return coeffs_[leading_zeros()]; }

  BivarPoly operator-() const {
    BivarPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  BivarPoly& operator+=(const BivarPoly& rhs) { return accumulate(rhs, false); }
  BivarPoly& operator-=(const BivarPoly& rhs) { return accumulate(rhs, true); }

  BivarPoly& operator*=(const Integer& k) {
    if (k == 0) {
      coeffs_.clear();
    } else {
      for (auto& c : coeffs_) c *= k;
    }
    return *this;
  }

  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(BivarPoly p, const Integer& k) { return p *= k; }
  friend BivarPoly operator*(const Integer& k, BivarPoly p) { return p *= k; }
  friend BivarPoly operator*(BivarPoly p, long k) { return p *= Integer(k); }
  friend BivarPoly operator*(long k, BivarPoly p) { return p *= Integer(k); }

  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (&lhs == &rhs) return square(lhs);
    const auto& a = lhs.coeffs_;
    const auto& b = rhs.coeffs_;
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      }
    }
    return BivarPoly(std::move(out));
  }

  BivarPoly& operator*=(const BivarPoly& rhs) { return *this = *this * rhs; }

  friend BivarPoly square(const BivarPoly& p) {
    if (p.is_zero()) return {};
    const auto& a = p.coeffs_;
    const std::size_t n = a.size();
    std::vector<Integer> out(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
      }
    }
    for (auto& c : out) c *= 2;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_addmul(out[2 * i].get_mpz_t(), a[i].get_mpz_t(), a[i].get_mpz_t());
    }
    return BivarPoly(std::move(out));
  }

  friend bool operator==(const BivarPoly& lhs, const BivarPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  BivarPoly& accumulate(const BivarPoly& rhs, bool subtract) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -rhs : rhs;
      return *this;
    }
    if (coeffs_.size() != rhs.coeffs_.size()) {
      throw std::domain_error("sum of forms with different degrees is not homogeneous");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (subtract) {
        coeffs_[k] -= rhs.coeffs_[k];
      } else {
        coeffs_[k] += rhs.coeffs_[k];
      }
    }
    *this = BivarPoly(std::move(coeffs_));
    return *this;
  }

  std::vector<Integer> coeffs_;
};

inline BivarPoly power(const BivarPoly& p, unsigned k) {
  BivarPoly result = BivarPoly::constant(1);
  BivarPoly base = p;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k != 0) base = square(base);
  }
  return result;
}

/// Value of the form at (u, v).
inline Integer eval_at(const BivarPoly& p, const Integer& u, const Integer& v) {
  if (p.is_zero()) return 0;
  const auto c = p.coefficients();
  Integer acc = c[0];
  Integer vpow = 1;
  for (std::size_t k = 1; k < c.size(); ++k) {
    vpow *= v;
    acc *= u;
    acc += c[k] * vpow;
  }
  return acc;
}

struct ContentSplit {
  Integer content;
  BivarPoly primitive;
};

inline Integer content(std::span<const Integer> coeffs) {
  Integer g = 0;
  for (const auto& c : coeffs) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Positive content and the primitive part with the input's signs.
inline ContentSplit content_primitive(const BivarPoly& p) {
  if (p.is_zero()) throw std::domain_error("content undefined for zero polynomial");
  Integer g = content(p.coefficients());
  if (g == 1) return {g, p};
  std::vector<Integer> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) c = exact_quotient(c, g);
  return {g, BivarPoly(std::move(out))};
}

/// Exact quotient p / d of forms; throws if d does not divide p.
inline BivarPoly exact_div(const BivarPoly& p, const BivarPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return {};
  const std::size_t n = p.degree();
  const std::size_t m = d.degree();
  if (m > n) throw std::domain_error("polynomial division not exact");
  const auto dc = d.coefficients();
  const std::size_t i0 = d.leading_zeros();
  const Integer& lead = dc[i0];

  std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Integer> quot(n - m + 1);
  for (std::size_t j = 0; j + m <= n; ++j) {
    const Integer& target = rem[j + i0];
    if (target == 0) continue;
    if (!divisible(target, lead)) throw std::domain_error("polynomial division not exact");
    quot[j] = exact_quotient(target, lead);
    for (std::size_t i = i0; i <= m; ++i) {
      mpz_submul(rem[j + i].get_mpz_t(), quot[j].get_mpz_t(), dc[i].get_mpz_t());
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
    throw std::domain_error("polynomial division not exact");
  }
  return BivarPoly(std::move(quot));
}

namespace detail {

// Dense univariate polynomials, index = exponent, no trailing zeros.
using Univariate = std::vector<Integer>;

inline void trim(Univariate& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline void make_primitive(Univariate& a) {
  if (a.empty()) return;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : a) c = exact_quotient(c, g);
  }
}

// Pseudo-remainder of a by b, up to a nonzero integer factor.
inline Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  Integer g, sa, sb;
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpz_gcd(g.get_mpz_t(), lb.get_mpz_t(), a.back().get_mpz_t());
    sa = exact_quotient(lb, g);
    sb = exact_quotient(a.back(), g);
    for (std::size_t k = 0; k < shift; ++k) a[k] *= sa;
    for (std::size_t k = 0; k <= db; ++k) {
      a[k + shift] *= sa;
      mpz_submul(a[k + shift].get_mpz_t(), sb.get_mpz_t(), b[k].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

// Primitive pseudo-remainder sequence.
inline Univariate primitive_gcd(Univariate a, Univariate b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Univariate r = pseudo_remainder(std::move(a), b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Primitive GCD of two forms with positive leading coefficient.
inline BivarPoly gcd(const BivarPoly& p, const BivarPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd undefined for two zero polynomials");
  auto normalized = [](BivarPoly f) {
    f = content_primitive(f).primitive;
    return f.leading_coefficient() < 0 ? -f : f;
  };
  if (q.is_zero()) return normalized(p);
  if (p.is_zero()) return normalized(q);

  // Split off u^a v^b, leaving univariate polynomials in t = v/u with nonzero
  // constant term.
  const std::size_t v_power = std::min(p.leading_zeros(), q.leading_zeros());
  const std::size_t u_power = std::min(p.trailing_zeros(), q.trailing_zeros());
  auto dehomogenize = [](const BivarPoly& f) {
    const auto c = f.coefficients();
    return detail::Univariate(c.begin() + static_cast<std::ptrdiff_t>(f.leading_zeros()),
                              c.end() - static_cast<std::ptrdiff_t>(f.trailing_zeros()));
  };
  detail::Univariate g = detail::primitive_gcd(dehomogenize(p), dehomogenize(q));

  std::vector<Integer> coeffs(v_power);
  coeffs.insert(coeffs.end(), g.begin(), g.end());
  coeffs.resize(coeffs.size() + u_power);
  return normalized(BivarPoly(std::move(coeffs)));
}

}  // namespace biquad
