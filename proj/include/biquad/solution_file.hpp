#pragma once

// Line-oriented text format for solutions and certificates.
//
//   # comment
//   kind: parametric            kind: numeric
//   degree: 11                  x: 59
//   x: c0 c1 ... c11            y: 158
//   y: ...                      z: 133
//   z: ...                      w: 134
//   w: ...
//
// Certificates use `kind: certificate`, a `name:` line, and one or more
// `quadpoly: <label>` sections of `a b c d coefficient` lines, terms in
// descending graded-lexicographic order.

#include "biquad/bivar_poly.hpp"
#include "biquad/integer.hpp"
#include "biquad/quad_poly.hpp"
#include "biquad/solution.hpp"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace biquad {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Certificate {
  std::string name;
  std::vector<std::pair<std::string, QuadPoly>> sections;

  const QuadPoly& section(std::string_view label) const {
    for (const auto& [l, p] : sections) {
      if (l == label) return p;
    }
    throw std::out_of_range("certificate has no section " + std::string(label));
  }
};

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    out.push_back({number, std::move(text)});
  }
  return out;
}

inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// "key: rest" -> rest; throws when the key differs.
inline std::string_view expect_key(const Line& line, std::string_view key) {
  std::string_view s = line.text;
  if (s.size() <= key.size() || s.substr(0, key.size()) != key || s[key.size()] != ':') {
    throw FormatError(line.number, "expected '" + std::string(key) + ":'");
  }
  return s.substr(key.size() + 1);
}

inline std::vector<Integer> parse_integers(const Line& line, std::string_view rest) {
  std::vector<Integer> out;
  for (auto word : split_words(rest)) {
    Integer v;
    if (!parse_integer(word, v)) throw FormatError(line.number, "not an integer: '" + std::string(word) + "'");
    out.push_back(std::move(v));
  }
  return out;
}

inline void write_row(std::ostream& out, std::string_view key, const BivarPoly& p, std::size_t degree) {
  out << key << ':';
  if (p.is_zero()) {
    for (std::size_t k = 0; k <= degree; ++k) out << " 0";
  } else {
    for (const auto& c : p.coefficients()) out << ' ' << to_string(c);
  }
  out << '\n';
}

inline void write_quadpoly(std::ostream& out, std::string_view label, const QuadPoly& p) {
  out << "quadpoly: " << label << '\n';
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    out << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << ' ' << to_string(c) << '\n';
  }
}

inline std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

inline std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace detail

inline QuarticSolution parse_solution(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw FormatError(0, "empty solution file");
  const auto kind_words = detail::split_words(detail::expect_key(lines[0], "kind"));
  if (kind_words.size() != 1) throw FormatError(lines[0].number, "malformed kind line");

  static constexpr std::string_view keys[4] = {"x", "y", "z", "w"};
  if (kind_words[0] == "numeric") {
    if (lines.size() != 5) {
      throw FormatError(lines.size() < 5 ? lines.back().number : lines[5].number,
                        "numeric solution needs exactly four component lines");
    }
    std::array<Integer, 4> v;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& line = lines[i + 1];
      auto values = detail::parse_integers(line, detail::expect_key(line, keys[i]));
      if (values.size() != 1) throw FormatError(line.number, "numeric component needs exactly one integer");
      v[i] = std::move(values[0]);
    }
    return NumericSolution{v[0], v[1], v[2], v[3]};
  }
  if (kind_words[0] == "parametric") {
    if (lines.size() < 2) throw FormatError(lines[0].number, "missing degree line");
    const auto deg_words = detail::split_words(detail::expect_key(lines[1], "degree"));
    std::size_t degree = 0;
    try {
      if (deg_words.size() != 1 || deg_words[0].find_first_not_of("0123456789") != std::string_view::npos) {
        throw std::invalid_argument("degree");
      }
      degree = std::stoul(std::string(deg_words[0]));
    } catch (const std::exception&) {
      throw FormatError(lines[1].number, "malformed degree");
    }
    if (lines.size() != 6) {
      throw FormatError(lines.size() < 6 ? lines.back().number : lines[6].number,
                        "parametric solution needs exactly four component lines");
    }
    std::array<BivarPoly, 4> comps;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& line = lines[i + 2];
      auto values = detail::parse_integers(line, detail::expect_key(line, keys[i]));
      if (values.size() != degree + 1) {
        throw FormatError(line.number, "expected " + std::to_string(degree + 1) + " coefficients, found " +
                                           std::to_string(values.size()));
      }
      comps[i] = BivarPoly(std::move(values));
    }
    return ParametricSolution{comps[0], comps[1], comps[2], comps[3]};
  }
  throw FormatError(lines[0].number, "unknown kind '" + std::string(kind_words[0]) + "'");
}

inline void write_solution(std::ostream& out, const QuarticSolution& s) {
  if (const auto* n = std::get_if<NumericSolution>(&s)) {
    out << "kind: numeric\n";
    out << "x: " << to_string(n->x) << "\ny: " << to_string(n->y) << "\nz: " << to_string(n->z)
        << "\nw: " << to_string(n->w) << '\n';
    return;
  }
  const auto& p = std::get<ParametricSolution>(s);
  const auto degree = formal_degree(p);
  if (!degree) throw std::domain_error("cannot write a parametric solution with all components zero");
  out << "kind: parametric\n";
  out << "degree: " << *degree << '\n';
  detail::write_row(out, "x", p.x, *degree);
  detail::write_row(out, "y", p.y, *degree);
  detail::write_row(out, "z", p.z, *degree);
  detail::write_row(out, "w", p.w, *degree);
}

inline std::string format_solution(const QuarticSolution& s) {
  std::ostringstream out;
  write_solution(out, s);
  return out.str();
}

inline QuarticSolution load_solution_file(const std::filesystem::path& path) {
  auto in = detail::open_for_read(path);
  return parse_solution(in);
}

inline void save_solution_file(const std::filesystem::path& path, const QuarticSolution& s) {
  const std::string text = format_solution(s);
  auto out = detail::open_for_write(path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

// ---------------------------------------------------------------------------
// Certificates

inline void write_certificate(std::ostream& out, const Certificate& cert, std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "kind: certificate\n";
  out << "name: " << cert.name << '\n';
  for (const auto& [label, poly] : cert.sections) detail::write_quadpoly(out, label, poly);
}

inline Certificate parse_certificate(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.size() < 2) throw FormatError(lines.empty() ? 0 : lines.back().number, "truncated certificate");
  const auto kind = detail::split_words(detail::expect_key(lines[0], "kind"));
  if (kind.size() != 1 || kind[0] != "certificate") throw FormatError(lines[0].number, "not a certificate");
  const auto name = detail::split_words(detail::expect_key(lines[1], "name"));
  if (name.size() != 1) throw FormatError(lines[1].number, "malformed name line");

  Certificate cert{std::string(name[0]), {}};
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.text.starts_with("quadpoly:")) {
      const auto label = detail::split_words(detail::expect_key(line, "quadpoly"));
      if (label.size() != 1) throw FormatError(line.number, "malformed quadpoly header");
      cert.sections.emplace_back(std::string(label[0]), QuadPoly{});
      continue;
    }
    if (cert.sections.empty()) throw FormatError(line.number, "term outside a quadpoly section");
    const auto words = detail::split_words(line.text);
    if (words.size() != 5) throw FormatError(line.number, "expected 'a b c d coefficient'");
    Exponents e{};
    for (std::size_t k = 0; k < 4; ++k) {
      Integer v;
      if (!parse_integer(words[k], v) || v < 0 || !v.fits_uint_p()) {
        throw FormatError(line.number, "bad exponent '" + std::string(words[k]) + "'");
      }
      e[k] = static_cast<unsigned>(v.get_ui());
    }
    Integer c;
    if (!parse_integer(words[4], c) || c == 0) throw FormatError(line.number, "bad coefficient");
    auto& poly = cert.sections.back().second;
    if (poly.terms().contains(e)) throw FormatError(line.number, "repeated term");
    poly.add_term(e, c);
  }
  return cert;
}

inline void save_certificate_file(const std::filesystem::path& path, const Certificate& cert,
                                  std::string_view comment = {}) {
  std::ostringstream text;
  write_certificate(text, cert, comment);
  auto out = detail::open_for_write(path);
  out << text.str();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline Certificate load_certificate_file(const std::filesystem::path& path) {
  auto in = detail::open_for_read(path);
  return parse_certificate(in);
}

/// Reads the `kind:` value of the first content line without parsing the rest.
inline std::string peek_kind(const std::filesystem::path& path) {
  auto in = detail::open_for_read(path);
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw FormatError(0, "empty file");
  const auto words = detail::split_words(detail::expect_key(lines[0], "kind"));
  if (words.size() != 1) throw FormatError(lines[0].number, "malformed kind line");
  return std::string(words[0]);
}

}  // namespace biquad
