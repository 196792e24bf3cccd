#pragma once

// Command-line front end. Exit status: 0 success, 1 domain failure, 2 usage.

#include "biquad/richmond.hpp"
#include "biquad/search.hpp"
#include "biquad/seed_catalog.hpp"
#include "biquad/solution.hpp"
#include "biquad/solution_file.hpp"
#include "biquad/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace biquad {

namespace detail {

inline Branch parse_branch(const std::string& s) {
  if (s == "plus") return Branch::plus;
  if (s == "minus") return Branch::minus;
  throw CLI::ValidationError("--branch", "must be plus or minus");
}

// A catalog name or a solution file path.
inline QuarticSolution resolve_seed(const std::string& name_or_path) {
  for (const auto& r : catalog()) {
    if (r.name != name_or_path) continue;
    if (r.status != SeedStatus::verified) {
      throw std::domain_error("seed " + r.name + " needs repair; run `repair --seed " + r.name + "` first");
    }
    return r.solution;
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw std::domain_error("'" + name_or_path + "' is neither a catalog seed nor a readable file");
  }
  return std::visit([](const auto& s) -> QuarticSolution { return verify(s); }, load_solution_file(name_or_path));
}

inline std::vector<SearchHit> load_hits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_hits(in);
}

inline void write_hits_file(const std::string& path, const std::vector<SearchHit>& hits) {
  std::ostringstream text;
  write_hits(text, hits);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text.str();
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangent-plane construction of solutions of x^4 + y^4 = z^4 + w^4", "biquad"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "Shipped seed solutions");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list = catalog_cmd->add_subcommand("list", "Names, degrees and statuses");
  auto* catalog_export = catalog_cmd->add_subcommand("export", "Write a seed to a solution file");
  std::string export_name, export_out;
  catalog_export->add_option("name", export_name, "Seed name")->required();
  catalog_export->add_option("--out", export_out, "Output file")->required();

  auto* transform_cmd = app.add_subcommand("transform", "Apply one branch of the construction and normalize");
  std::string seed, branch, out_path;
  transform_cmd->add_option("--seed", seed, "Catalog name or solution file")->required();
  transform_cmd->add_option("--branch", branch, "plus or minus")->required()->check(CLI::IsMember({"plus", "minus"}));
  transform_cmd->add_option("--out", out_path, "Output solution file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file (residual) or a certificate file");
  std::string verify_path;
  verify_cmd->add_option("file", verify_path, "Solution or certificate file")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Emit a divisibility or discriminant certificate");
  std::string cert_branch, cert_out;
  bool cert_disc = false;
  auto* branch_opt =
      certify_cmd->add_option("--branch", cert_branch, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  auto* disc_flag = certify_cmd->add_flag("--discriminant", cert_disc, "Discriminant identity");
  branch_opt->excludes(disc_flag);
  certify_cmd->add_option("--out", cert_out, "Certificate file")->required();

  auto* golden_cmd = app.add_subcommand("golden-check", "Regenerate the degree-74 solution and compare");

  auto* repair_cmd = app.add_subcommand("repair", "Complete a seed printed with a missing coefficient");
  std::string repair_seed_name, repair_out;
  repair_cmd->add_option("--seed", repair_seed_name, "Catalog name")->required();
  repair_cmd->add_option("--out", repair_out, "Output solution file")->required();

  auto* search_cmd = app.add_subcommand("search", "Enumerate a^4 + b^4 = c^4 + d^4 up to a bound");
  std::uint64_t bound = 0;
  unsigned workers = 1;
  search_cmd->add_option("--bound", bound, "Largest entry")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
  search_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* sample_cmd = app.add_subcommand("sample", "Specialize a parametric solution at small coprime (u, v)");
  std::string sample_in, sample_out;
  long max_param = 0;
  sample_cmd->add_option("--in", sample_in, "Parametric solution file")->required();
  sample_cmd->add_option("--max-param", max_param, "Bound on |u| and |v|")->required()->check(CLI::Range(1L, 1000L));
  sample_cmd->add_option("--out", sample_out, "Output hit file")->required();

  auto* compare_cmd = app.add_subcommand("compare", "Coverage of two hit files under equivalence");
  std::string cmp_a, cmp_b;
  compare_cmd->add_option("--a", cmp_a, "First hit file")->required();
  compare_cmd->add_option("--b", cmp_b, "Second hit file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*certify_cmd && !cert_disc && cert_branch.empty()) {
      throw CLI::RequiredError("certify needs --branch or --discriminant");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*catalog_list) {
      for (const auto& r : catalog()) {
        out << r.name << ' ' << r.degree << ' ' << to_string(r.status) << '\n';
      }
      return 0;
    }
    if (*catalog_export) {
      const auto& r = get_seed(export_name);
      if (r.status != SeedStatus::verified) throw std::domain_error("seed " + r.name + " needs repair");
      save_solution_file(export_out, r.solution);
      out << "wrote " << export_out << '\n';
      return 0;
    }
    if (*transform_cmd) {
      const auto input = detail::resolve_seed(seed);
      const Branch b = detail::parse_branch(branch);
      const QuarticSolution result =
          std::visit([b](const auto& s) -> QuarticSolution { return transform(s, b); }, input);
      save_solution_file(out_path, result);
      if (const auto* p = std::get_if<ParametricSolution>(&result)) {
        const auto report = degree_parity_report(*p);
        out << "degree: " << report.degree << '\n';
        out << "parity: " << (report.even ? "even" : "odd") << '\n';
        out << "trivial: " << (report.trivial ? "yes" : "no") << '\n';
      } else {
        const auto& n = std::get<NumericSolution>(result);
        out << "solution: " << to_string(n) << '\n';
        out << "trivial: " << (is_trivial(n) ? "yes" : "no") << '\n';
      }
      return 0;
    }
    if (*verify_cmd) {
      if (peek_kind(verify_path) == "certificate") {
        const bool ok = check_certificate(load_certificate_file(verify_path));
        out << "certificate: " << (ok ? "reconstructs exactly" : "FAILED") << '\n';
        return ok ? 0 : 1;
      }
      const auto r = residual(load_solution_file(verify_path));
      if (const auto* n = std::get_if<Integer>(&r)) {
        out << "residual: " << to_string(*n) << '\n';
        return *n == 0 ? 0 : 1;
      }
      const auto& p = std::get<BivarPoly>(r);
      if (p.is_zero()) {
        out << "residual: 0\n";
        return 0;
      }
      out << "residual: nonzero form of degree " << p.degree() << '\n';
      return 1;
    }
    if (*certify_cmd) {
      const DivisionCertificate cert =
          cert_disc ? discriminant_congruence() : divisibility_certificate(detail::parse_branch(cert_branch));
      const bool ok = cert.reconstructs();
      save_certificate_file(cert_out, cert.to_certificate(),
                            cert_disc ? "(B^2 - 4AC) - 64X^4Y^4Z^4W^4(W^4 - Z^4)^2 = divisor * quotient"
                                      : "residual of the new point = divisor * quotient");
      out << "certificate: " << cert.name << '\n';
      out << "dividend terms: " << cert.dividend.size() << '\n';
      out << "quotient terms: " << cert.quotient.size() << '\n';
      if (const auto d = cert.quotient.homogeneous_degree()) out << "quotient degree: " << *d << '\n';
      out << "reconstruction: " << (ok ? "exact" : "FAILED") << '\n';
      return ok ? 0 : 1;
    }
    if (*golden_cmd) {
      const auto& seed11 = std::get<ParametricSolution>(get_seed("zajta-11").solution);
      const auto regenerated = transform(seed11, Branch::minus);
      const bool match = regenerated == golden_deg74();
      out << "golden-check: " << (match ? "match" : "MISMATCH") << " (degree " << formal_degree(regenerated).value_or(0)
          << ")\n";
      return match ? 0 : 1;
    }
    if (*repair_cmd) {
      const auto repaired = repair_seed(get_seed(repair_seed_name));
      save_solution_file(repair_out, repaired.solution);
      out << "repair: " << (repaired.repair_log.empty() ? "none needed" : repaired.repair_log) << '\n';
      out << "residual: 0\n";
      return 0;
    }
    if (*search_cmd) {
      write_hits(out, search_equal_sums(bound, workers));
      return 0;
    }
    if (*sample_cmd) {
      const auto loaded = load_solution_file(sample_in);
      const auto* p = std::get_if<ParametricSolution>(&loaded);
      if (p == nullptr) throw std::domain_error("sample needs a parametric solution");
      const auto hits = sample_parametrization(verify(*p), max_param);
      detail::write_hits_file(sample_out, hits);
      out << "samples: " << hits.size() << '\n';
      return 0;
    }
    if (*compare_cmd) {
      write_coverage(out, coverage_compare(detail::load_hits(cmp_a), detail::load_hits(cmp_b)));
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace biquad
