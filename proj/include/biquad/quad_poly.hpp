#pragma once

// Sparse polynomials in four indeterminates X, Y, Z, W.
//
// Terms are kept in a map ordered graded-lexicographically on the exponent
// quadruple, so iteration and division are deterministic. Stored
// coefficients are never zero.

#include "biquad/bivar_poly.hpp"
#include "biquad/integer.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace biquad {

using Exponents = std::array<unsigned, 4>;

inline unsigned total_degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class QuadPoly {
 public:
  using TermMap = std::map<Exponents, Integer, GrlexLess>;

  QuadPoly() = default;

  static QuadPoly constant(const Integer& c) { return term({0, 0, 0, 0}, c); }

  static QuadPoly term(const Exponents& e, const Integer& c) {
    QuadPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  static QuadPoly X() { return term({1, 0, 0, 0}, 1); }
  static QuadPoly Y() { return term({0, 1, 0, 0}, 1); }
  static QuadPoly Z() { return term({0, 0, 1, 0}, 1); }
  static QuadPoly W() { return term({0, 0, 0, 1}, 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Greatest term in graded-lexicographic order.
  const std::pair<const Exponents, Integer>& leading_term() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  /// Common total degree when every term has the same one.
  std::optional<unsigned> homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    const unsigned d = total_degree(terms_.begin()->first);
    if (total_degree(terms_.rbegin()->first) != d) return std::nullopt;
    return d;
  }

  void add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_product_term(const Exponents& e, const Integer& a, const Integer& b) {
    auto [it, inserted] = terms_.try_emplace(e);
    mpz_addmul(it->second.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (it->second == 0) terms_.erase(it);
  }

  QuadPoly operator-() const {
    QuadPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  QuadPoly& operator+=(const QuadPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  QuadPoly& operator-=(const QuadPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  QuadPoly& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= k;
    }
    return *this;
  }

  friend QuadPoly operator+(QuadPoly lhs, const QuadPoly& rhs) { return lhs += rhs; }
  friend QuadPoly operator-(QuadPoly lhs, const QuadPoly& rhs) { return lhs -= rhs; }
  friend QuadPoly operator*(QuadPoly p, const Integer& k) { return p *= k; }
  friend QuadPoly operator*(const Integer& k, QuadPoly p) { return p *= k; }
  friend QuadPoly operator*(QuadPoly p, long k) { return p *= Integer(k); }
  friend QuadPoly operator*(long k, QuadPoly p) { return p *= Integer(k); }

  friend QuadPoly operator*(const QuadPoly& lhs, const QuadPoly& rhs) {
    QuadPoly out;
    for (const auto& [ea, ca] : lhs.terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        out.add_product_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca, cb);
      }
    }
    return out;
  }
  QuadPoly& operator*=(const QuadPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const QuadPoly& lhs, const QuadPoly& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  TermMap terms_;
};

inline QuadPoly power(const QuadPoly& p, unsigned k) {
  QuadPoly result = QuadPoly::constant(1);
  QuadPoly base = p;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

/// Exact quotient n / d by leading-term reduction; throws "remainder nonzero"
/// when d does not divide n.
inline QuadPoly exact_div(const QuadPoly& n, const QuadPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& [lead_exp, lead_coeff] = d.leading_term();
  QuadPoly rem = n;
  QuadPoly quot;
  while (!rem.is_zero()) {
    const auto [e, c] = rem.leading_term();
    Exponents shift{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] < lead_exp[i]) throw std::domain_error("remainder nonzero");
      shift[i] = e[i] - lead_exp[i];
    }
    if (!divisible(c, lead_coeff)) throw std::domain_error("remainder nonzero");
    const Integer q = exact_quotient(c, lead_coeff);
    quot.add_term(shift, q);
    const Integer neg_q = -q;
    for (const auto& [de, dc] : d.terms()) {
      rem.add_product_term({de[0] + shift[0], de[1] + shift[1], de[2] + shift[2], de[3] + shift[3]}, neg_q, dc);
    }
  }
  if (!(d * quot == n)) throw std::domain_error("remainder nonzero");
  return quot;
}

/// X^4 + Y^4 - Z^4 - W^4
inline QuadPoly surface_form() {
  QuadPoly f;
  f.add_term({4, 0, 0, 0}, 1);
  f.add_term({0, 4, 0, 0}, 1);
  f.add_term({0, 0, 4, 0}, -1);
  f.add_term({0, 0, 0, 4}, -1);
  return f;
}

/// Substitutes X, Y, Z, W by the forms x, y, z, w (all nonzero ones of one
/// degree) and returns the resulting form.
inline BivarPoly compose(const QuadPoly& f, const std::array<const BivarPoly*, 4>& xyzw) {
  std::optional<std::size_t> degree;
  for (const BivarPoly* p : xyzw) {
    if (p->is_zero()) continue;
    if (degree && *degree != p->degree()) throw std::domain_error("components have mixed formal degrees");
    degree = p->degree();
  }
  std::array<std::vector<BivarPoly>, 4> powers;
  for (std::size_t i = 0; i < 4; ++i) powers[i].push_back(BivarPoly::constant(1));
  auto power_of = [&](std::size_t i, unsigned k) -> const BivarPoly& {
    auto& cache = powers[i];
    while (cache.size() <= k) cache.push_back(cache.back() * *xyzw[i]);
    return cache[k];
  };

  BivarPoly out;
  for (const auto& [e, c] : f.terms()) {
    BivarPoly t = BivarPoly::constant(c);
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] != 0) t = t * power_of(i, e[i]);
    }
    out += t;
  }
  return out;
}

}  // namespace biquad
