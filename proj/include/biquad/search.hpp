#pragma once

// Numeric coincidences a^4 + b^4 = c^4 + d^4 and sampling of parametric families.

#include "biquad/bivar_poly.hpp"
#include "biquad/integer.hpp"
#include "biquad/richmond.hpp"
#include "biquad/solution.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace biquad {

/// a^4 + b^4 = c^4 + d^4 = sum with a <= b, c <= d, a < c.
struct SearchHit {
  Integer a, b, c, d;
  Integer sum;
  bool primitive = false;

  friend bool operator==(const SearchHit& l, const SearchHit& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d && l.sum == r.sum && l.primitive == r.primitive;
  }
  /// Sum ascending, then (a, b, c, d) lexicographic.
  friend bool operator<(const SearchHit& l, const SearchHit& r) {
    if (l.sum != r.sum) return l.sum < r.sum;
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    if (l.c != r.c) return l.c < r.c;
    return l.d < r.d;
  }
};

inline SearchHit make_hit(Integer a, Integer b, Integer c, Integer d) {
  Integer sum = pow_ui(a, 4) + pow_ui(b, 4);
  Integer g = gcd(gcd(a, b), gcd(c, d));
  return {std::move(a), std::move(b), std::move(c), std::move(d), std::move(sum), g == 1};
}

inline NumericSolution to_solution(const SearchHit& h) { return {h.a, h.b, h.c, h.d}; }

/// Largest b with 2 b^4 representable in uint64_t; pair sums up to this
/// bound are indexed with machine keys, beyond it with Integer keys.
inline std::uint64_t machine_key_bound() {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t lo = 1, hi = std::uint64_t{1} << 16;
  auto fits = [](std::uint64_t b) {
    const auto q = static_cast<unsigned __int128>(b) * b * b * b * 2;
    return q <= max;
  };
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

namespace detail {

inline std::uint64_t fourth(std::uint64_t a) { return a * a * a * a; }

struct MachineKey {
  static std::uint64_t make(std::uint64_t a, std::uint64_t b) { return fourth(a) + fourth(b); }
  using type = std::uint64_t;
};

struct BigKey {
  static Integer make(std::uint64_t a, std::uint64_t b) {
    return pow_ui(make_integer(a), 4) + pow_ui(make_integer(b), 4);
  }
  using type = Integer;
};

template <class K>
struct PairEntry {
  typename K::type sum;
  std::uint32_t a, b;
  bool operator<(const PairEntry& o) const { return std::tie(sum, a, b) < std::tie(o.sum, o.a, o.b); }
};

// Indexes a^4 + b^4 for 1 <= a <= b <= bound, workers splitting the a-range
// into interleaved stripes, then sorts so the merge is order-independent.
template <class K>
std::vector<SearchHit> search_with_keys(std::uint64_t bound, unsigned workers) {
  workers = std::max(1u, workers);
  std::vector<std::vector<PairEntry<K>>> parts(workers);
  auto work = [bound, workers, &parts](unsigned id) {
    auto& out = parts[id];
    for (std::uint64_t a = 1 + id; a <= bound; a += workers) {
      for (std::uint64_t b = a; b <= bound; ++b) {
        out.push_back({K::make(a, b), static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
      }
    }
    std::sort(out.begin(), out.end());
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }

  std::vector<PairEntry<K>> all;
  for (auto& p : parts) {
    const auto mid = static_cast<std::ptrdiff_t>(all.size());
    all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::inplace_merge(all.begin(), all.begin() + mid, all.end());
  }

  std::vector<SearchHit> hits;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j].sum == all[i].sum) ++j;
    for (std::size_t p = i; p < j; ++p) {
      for (std::size_t q = p + 1; q < j; ++q) {
        // entries are sorted by a, and distinct pairs with one sum differ in a
        hits.push_back(make_hit(make_integer(std::uint64_t{all[p].a}), make_integer(std::uint64_t{all[p].b}),
                                make_integer(std::uint64_t{all[q].a}), make_integer(std::uint64_t{all[q].b})));
      }
    }
    i = j;
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace detail

/// All nontrivial a^4 + b^4 = c^4 + d^4 with every entry at most `bound`,
/// each once in canonical form. Output does not depend on `workers`.
inline std::vector<SearchHit> search_equal_sums(std::uint64_t bound, unsigned workers = 1) {
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
  if (bound > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("search bound too large");
  if (bound <= machine_key_bound()) return detail::search_with_keys<detail::MachineKey>(bound, workers);
  return detail::search_with_keys<detail::BigKey>(bound, workers);
}

inline std::string format_hit(const SearchHit& h) {
  return to_string(h.a) + ' ' + to_string(h.b) + ' ' + to_string(h.c) + ' ' + to_string(h.d) + ' ' +
         to_string(h.sum) + ' ' + (h.primitive ? '1' : '0');
}

inline void write_hits(std::ostream& out, const std::vector<SearchHit>& hits) {
  for (const auto& h : hits) out << format_hit(h) << '\n';
}

/// Reads hit lines; the sum and primitive flag are recomputed and must match.
inline std::vector<SearchHit> parse_hits(std::istream& in) {
  std::vector<SearchHit> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::array<std::string, 6> field;
    std::string extra;
    if (!(words >> field[0] >> field[1] >> field[2] >> field[3] >> field[4] >> field[5]) || (words >> extra)) {
      throw std::runtime_error("line " + std::to_string(number) + ": expected 'a b c d sum primitive-flag'");
    }
    std::array<Integer, 4> v;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!parse_integer(field[k], v[k])) {
        throw std::runtime_error("line " + std::to_string(number) + ": not an integer: '" + field[k] + "'");
      }
    }
    const SearchHit h = make_hit(v[0], v[1], v[2], v[3]);
    const bool canonical = h.a >= 1 && h.a <= h.b && h.c <= h.d && h.a < h.c;
    const bool on_surface = h.sum == pow_ui(h.c, 4) + pow_ui(h.d, 4);
    if (!canonical || !on_surface || to_string(h.sum) != field[4] || field[5] != (h.primitive ? "1" : "0")) {
      throw std::runtime_error("line " + std::to_string(number) + ": not a canonical hit");
    }
    out.push_back(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampling parametric families

/// Canonical hit for a normalized nontrivial numeric solution with no zero
/// component: pairs sorted, the side with the smaller entry first.
inline SearchHit canonical_hit(const NumericSolution& s) {
  const auto n = normalize(s);
  if (n.x == 0 || n.y == 0 || n.z == 0 || n.w == 0) throw std::domain_error("zero component has no canonical hit form");
  Integer a = n.x, b = n.y, c = n.z, d = n.w;
  if (b < a) std::swap(a, b);
  if (d < c) std::swap(c, d);
  if (c < a) {
    std::swap(a, c);
    std::swap(b, d);
  }
  if (a == c) throw std::domain_error("trivial solution has no canonical hit form");
  return make_hit(std::move(a), std::move(b), std::move(c), std::move(d));
}

/// Numeric solutions obtained from s at coprime (u, v) with |u|, |v| <= max_param,
/// normalized, with trivial and zero-component ones dropped. Sorted and deduplicated
/// in canonical hit order.
inline std::vector<SearchHit> sample_parametrization(const ParametricSolution& s, long max_param) {
  detail::require_verified(s);
  if (max_param < 1) throw std::invalid_argument("max-param must be at least 1");
  std::set<std::tuple<Integer, Integer, Integer, Integer>> seen;
  std::vector<SearchHit> out;
  for (long u = -max_param; u <= max_param; ++u) {
    for (long v = -max_param; v <= max_param; ++v) {
      if (std::gcd(u, v) != 1) continue;
      const auto n = normalize(verify(eval_at(s, Integer(u), Integer(v))));
      if (n.x == 0 || n.y == 0 || n.z == 0 || n.w == 0 || is_trivial(n)) continue;
      SearchHit h = canonical_hit(n);
      if (seen.emplace(h.a, h.b, h.c, h.d).second) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CoverageReport {
  std::vector<SearchHit> only_a, only_b, both;
};

/// Splits two solution sets into A\B, B\A and A n B under `equivalent`.
inline CoverageReport coverage_compare(const std::vector<SearchHit>& a, const std::vector<SearchHit>& b) {
  auto contains = [](const std::vector<SearchHit>& set, const SearchHit& h) {
    const auto sh = verify(to_solution(h));
    return std::any_of(set.begin(), set.end(), [&](const SearchHit& o) {
      return o.sum == h.sum && equivalent(verify(to_solution(o)), sh);
    });
  };
  CoverageReport r;
  for (const auto& h : a) (contains(b, h) ? r.both : r.only_a).push_back(h);
  for (const auto& h : b) {
    if (!contains(a, h)) r.only_b.push_back(h);
  }
  std::sort(r.only_a.begin(), r.only_a.end());
  std::sort(r.only_b.begin(), r.only_b.end());
  std::sort(r.both.begin(), r.both.end());
  return r;
}

inline void write_coverage(std::ostream& out, const CoverageReport& r) {
  out << "only-a: " << r.only_a.size() << '\n';
  out << "only-b: " << r.only_b.size() << '\n';
  out << "both: " << r.both.size() << '\n';
  for (const auto& h : r.only_a) out << "only-a " << format_hit(h) << '\n';
  for (const auto& h : r.only_b) out << "only-b " << format_hit(h) << '\n';
  for (const auto& h : r.both) out << "both " << format_hit(h) << '\n';
}

}  // namespace biquad
