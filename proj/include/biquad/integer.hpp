#pragma once

// Arbitrary-precision integers used throughout the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace biquad {

using Integer = mpz_class;

inline Integer make_integer(std::int64_t value) {
  Integer r;
  if (value >= 0) {
    const auto u = static_cast<std::uint64_t>(value);
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  } else {
    // two's complement magnitude, safe for INT64_MIN
    const std::uint64_t u = ~static_cast<std::uint64_t>(value) + 1;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    r = -r;
  }
  return r;
}

inline Integer make_integer(std::uint64_t value) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return r;
}

/// Parses an optionally signed decimal integer; rejects anything else.
inline bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') return false;
  }
  return out.set_str(std::string(text), 10) == 0;
}

inline std::string to_string(const Integer& value) { return value.get_str(10); }

inline Integer pow_ui(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool divisible(const Integer& n, const Integer& d) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer exact_quotient(const Integer& n, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace biquad
