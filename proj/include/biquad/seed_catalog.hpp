#pragma once

// Published starting solutions, as printed, plus the degree-74 reference data.

#include "biquad/bivar_poly.hpp"
#include "biquad/data/golden74.hpp"
#include "biquad/integer.hpp"
#include "biquad/richmond.hpp"
#include "biquad/solution.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace biquad {

enum class SeedStatus { verified, needs_repair };

inline const char* to_string(SeedStatus s) { return s == SeedStatus::verified ? "verified" : "needs-repair"; }

struct SeedRecord {
  std::string name;
  std::string citation;
  std::size_t degree = 0;
  QuarticSolution solution;
  SeedStatus status = SeedStatus::verified;
  /// Describes the fix applied by repair_seed, empty otherwise.
  std::string repair_log;
};

namespace detail {

inline BivarPoly form(std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return BivarPoly(std::move(v));
}

inline BivarPoly form(std::span<const std::int64_t> coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(make_integer(c));
  return BivarPoly(std::move(v));
}

inline std::vector<SeedRecord> build_catalog() {
  std::vector<SeedRecord> out;

  out.push_back({"zajta-11", "Zajta, degree 11 parametrization (p. 651)", 11,
                 verify(ParametricSolution{form({-1, -1, 4, 17, 33, 49, 58, 52, 32, 12, 2, 0}),
                                           form({1, 4, 8, 7, 5, 17, 44, 64, 58, 34, 12, 2}),
                                           form({1, 3, 8, 13, 9, -13, -44, -64, -58, -34, -12, -2}),
                                           form({1, 2, 2, 7, 27, 59, 78, 66, 36, 12, 2, 0})}),
                 SeedStatus::verified, {}});

  out.push_back({"zajta-13", "Zajta, degree 13 parametrization (p. 651)", 13,
                 verify(ParametricSolution{form({1, 3, 10, 22, 44, 67, 88, 95, 84, 58, 30, 10, 2, 0}),
                                           form({0, 0, 3, 9, 24, 45, 72, 91, 94, 80, 54, 28, 10, 2}),
                                           form({1, 3, 10, 22, 40, 63, 82, 95, 94, 80, 54, 28, 10, 2}),
                                           form({0, 2, 5, 15, 28, 47, 64, 73, 66, 48, 26, 10, 2, 0})}),
                 SeedStatus::verified, {}});

  // The W row is printed with 19 coefficients against 20 for the others.
  out.push_back({"brudno-19", "Brudno, degree 19 parametrization", 19,
                 ParametricSolution{
                     form({0, 1, 3, -15, 15, 6, -45, 82, -15, -123, 171, -159, 159, -98, 30, -12, 0, 3, 0, 1}),
                     form({1, -1, -3, -3, 21, -12, -44, 86, -93, 87, 3, -135, 142, -100, 72, -36, 12, -9, 1, -1}),
                     form({1, -1, -3, -3, 21, -6, -44, 62, 15, -129, 165, -129, 88, -46, 18, -6, 12, -3, 1, -1}),
                     form({1, -3, 3, 21, -60, 27, 58, -75, 57, -63, 63, -87, 100, -66, 36, -18, 9, 0, 1})},
                 SeedStatus::needs_repair, {}});

  out.push_back({"golden-74", "degree 74 solution from zajta-11 on the minus branch", 74,
                 verify(ParametricSolution{form(data::golden74_x), form(data::golden74_y), form(data::golden74_z),
                                           form(data::golden74_w)}),
                 SeedStatus::verified, {}});

  out.push_back({"euler-numeric", "smallest numeric solution, 59^4 + 158^4 = 133^4 + 134^4", 0,
                 verify(numeric(59, 158, 133, 134)), SeedStatus::verified, {}});
  return out;
}

}  // namespace detail

/// Shipped records, built once and never modified.
inline const std::vector<SeedRecord>& catalog() {
  static const std::vector<SeedRecord> records = detail::build_catalog();
  return records;
}

inline const SeedRecord& get_seed(std::string_view name) {
  for (const auto& r : catalog()) {
    if (r.name == name) return r;
  }
  std::string names;
  for (const auto& r : catalog()) names += (names.empty() ? "" : ", ") + r.name;
  throw std::out_of_range("unknown seed '" + std::string(name) + "'; available: " + names);
}

inline ParametricSolution golden_deg74() { return std::get<ParametricSolution>(get_seed("golden-74").solution); }

/// Completes a seed whose one component is missing exactly one coefficient.
/// Every insertion position and every value in [-range, range] is tried; the
/// completion must be unique and give residual zero.
inline SeedRecord repair_seed(const SeedRecord& record, long range = 300) {
  if (record.status == SeedStatus::verified) return record;
  const auto* sol = std::get_if<ParametricSolution>(&record.solution);
  if (sol == nullptr) throw std::domain_error("unrepairable seed: not parametric");

  const std::size_t n = record.degree;
  std::array<const BivarPoly*, 4> comps{&sol->x, &sol->y, &sol->z, &sol->w};
  std::optional<std::size_t> short_index;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t len = comps[i]->is_zero() ? 0 : comps[i]->degree() + 1;
    if (len == n + 1) continue;
    if (len != n || short_index) throw std::domain_error("unrepairable seed: defect is not one missing coefficient");
    short_index = i;
  }
  if (!short_index) throw std::domain_error("unrepairable seed: no defective component");

  const auto row = comps[*short_index]->coefficients();
  auto completed_row = [&](std::size_t pos, const Integer& value) {
    std::vector<Integer> v(row.begin(), row.end());
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), value);
    return BivarPoly(std::move(v));
  };
  auto with_component = [&](BivarPoly p) {
    ParametricSolution s = *sol;
    std::array<BivarPoly*, 4> slots{&s.x, &s.y, &s.z, &s.w};
    *slots[*short_index] = std::move(p);
    return s;
  };

  // Numeric prefilter: the residual at a few sample points must vanish
  // before the exact polynomial residual is computed.
  const std::array<std::pair<long, long>, 3> points{{{2, 3}, {5, -7}, {-11, 4}}};
  const Integer sign = *short_index < 2 ? 1 : -1;
  struct PointData {
    Integer u, v, others;
  };
  std::vector<PointData> pdata;
  for (auto [u, v] : points) {
    PointData d{u, v, 0};
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == *short_index) continue;
      const Integer t = pow_ui(eval_at(*comps[i], d.u, d.v), 4);
      d.others += (i < 2) ? t : Integer(-t);
    }
    pdata.push_back(std::move(d));
  }

  std::vector<std::pair<std::size_t, Integer>> found;
  std::vector<BivarPoly> found_forms;
  for (std::size_t pos = 0; pos <= n; ++pos) {
    const BivarPoly base = completed_row(pos, 0);
    std::vector<std::pair<Integer, Integer>> base_and_mono;
    for (const auto& d : pdata) {
      base_and_mono.emplace_back(eval_at(base, d.u, d.v), pow_ui(d.u, n - pos) * pow_ui(d.v, pos));
    }
    for (long c = -range; c <= range; ++c) {
      bool candidate = true;
      for (std::size_t k = 0; k < pdata.size() && candidate; ++k) {
        const Integer value = base_and_mono[k].first + c * base_and_mono[k].second;
        candidate = pdata[k].others + sign * pow_ui(value, 4) == 0;
      }
      if (!candidate) continue;
      BivarPoly p = completed_row(pos, c);
      if (!is_zero(residual(with_component(p)))) continue;
      if (std::find(found_forms.begin(), found_forms.end(), p) != found_forms.end()) continue;
      found.emplace_back(pos, Integer(c));
      found_forms.push_back(std::move(p));
    }
  }
  if (found.size() != 1) {
    throw std::domain_error("unrepairable seed: " + std::to_string(found.size()) + " completions found");
  }

  static constexpr const char* names[4] = {"x", "y", "z", "w"};
  SeedRecord out = record;
  out.solution = verify(with_component(found_forms.front()));
  out.status = SeedStatus::verified;
  out.repair_log = std::string(names[*short_index]) + ": inserted " + to_string(found.front().second) +
                   " at index " + std::to_string(found.front().first);
  return out;
}

}  // namespace biquad
