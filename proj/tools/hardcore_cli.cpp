#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hardcore/analysis.hpp"
#include "hardcore/dynamics.hpp"
#include "hardcore/errors.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/indepoly.hpp"
#include "hardcore/regions.hpp"
#include "hardcore/roots.hpp"
#include "hardcore/verify.hpp"

using nlohmann::ordered_json;

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json complex_json(hardcore::Complex z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

hardcore::Complex parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw hardcore::InputError("complex literal must look like re,im");
  try {
    std::size_t used = 0;
    std::string re_part = text.substr(0, comma);
    std::string im_part = text.substr(comma + 1);
    double re = std::stod(re_part, &used);
    if (used != re_part.size()) throw std::invalid_argument(re_part);
    double im = std::stod(im_part, &used);
    if (used != im_part.size()) throw std::invalid_argument(im_part);
    return {re, im};
  } catch (const std::logic_error&) {
    throw hardcore::InputError("cannot parse complex literal: " + text);
  }
}

void parse_delta_range(const std::string& text, int& lo, int& hi) {
  try {
    std::size_t used = 0;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
    }
  } catch (const std::logic_error&) {
    throw hardcore::InputError("cannot parse delta range: " + text);
  }
  if (lo < 2 || hi < lo || hi > 64)
    throw hardcore::InputError("delta range must lie within 2..64");
}

hardcore::RegionKind parse_region(const std::string& name) {
  using hardcore::RegionKind;
  if (name == "shearer") return RegionKind::shearer;
  if (name == "pr-eps") return RegionKind::pr_eps;
  if (name == "pr") return RegionKind::pr_union;
  if (name == "ud") return RegionKind::ud;
  if (name == "new") return RegionKind::new_domain;
  if (name == "d1") return RegionKind::half_disk_d1;
  if (name == "d2") return RegionKind::half_disk_d2;
  throw hardcore::InputError("unknown region: " + name);
}

// Single atomic write, stdout by default.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw hardcore::InputError("cannot open output file: " + out_path);
  out << text;
}

int cmd_regions_emit(int delta, const std::string& region, int samples,
                     double eps, const std::string& format,
                     const std::string& out_path) {
  hardcore::RegionSpec spec{parse_region(region), delta, eps};
  spec.validate();
  if (samples < 2) throw hardcore::InputError("need at least two samples");
  if (format != "csv" && format != "json")
    throw hardcore::InputError("format must be csv or json");
  std::ostringstream os;
  if (spec.kind == hardcore::RegionKind::new_domain) {
    auto rows = hardcore::new_domain_boundary(delta - 1, samples);
    if (format == "csv") {
      os << "beta,t,s\n";
      for (const auto& row : rows)
        os << fmt(row.beta) << ',' << fmt(row.t_value) << ','
           << fmt(row.s_value) << '\n';
    } else {
      ordered_json points = ordered_json::array();
      for (const auto& row : rows)
        points.push_back({{"beta", row.beta},
                          {"t", row.t_value},
                          {"s", row.s_value}});
      ordered_json j{{"region", region},
                     {"delta", delta},
                     {"samples", samples},
                     {"points", points}};
      os << j.dump(2) << '\n';
    }
  } else {
    auto rows = hardcore::region_boundary(spec, samples);
    if (format == "csv") {
      os << "arg,modulus\n";
      for (const auto& row : rows)
        os << fmt(row.arg) << ',' << fmt(row.modulus) << '\n';
    } else {
      ordered_json points = ordered_json::array();
      for (const auto& row : rows)
        points.push_back({{"arg", row.arg}, {"modulus", row.modulus}});
      ordered_json j{{"region", region},
                     {"delta", delta},
                     {"samples", samples},
                     {"points", points}};
      os << j.dump(2) << '\n';
    }
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_poly(const std::string& graph_path, const std::string& mode,
             double precision, const std::string& out_path) {
  std::ifstream in(graph_path);
  if (!in) throw hardcore::InputError("cannot open graph file: " + graph_path);
  hardcore::Graph g = hardcore::read_edge_list(in);
  hardcore::Polynomial p = hardcore::independence_polynomial(g);
  ordered_json j;
  if (mode == "compute") {
    j["coefficients"] = p.coefficient_strings();
  } else if (mode == "roots") {
    ordered_json roots = ordered_json::array();
    if (p.degree() >= 1)
      for (const auto& est : hardcore::polynomial_roots(p, precision))
        roots.push_back({{"re", est.value.real()},
                         {"im", est.value.imag()},
                         {"residual", est.residual}});
    j["degree"] = p.degree();
    j["roots"] = roots;
  } else {
    throw hardcore::InputError("mode must be compute or roots");
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_tree(int delta, int depth, const std::string& mode, double precision,
             const std::string& out_path) {
  if (delta < 2) throw hardcore::InputError("delta must be at least 2");
  int d = delta - 1;
  if (mode == "gen") {
    hardcore::RootedTree t = hardcore::complete_dary_tree(d, depth);
    std::ostringstream os;
    hardcore::write_edge_list(os, t.graph);
    emit(os.str(), out_path);
    return 0;
  }
  if (mode != "zeros")
    throw hardcore::InputError("mode must be gen or zeros");
  if (delta < 3)
    throw hardcore::InputError("zeros mode needs delta at least 3");
  hardcore::Polynomial p = hardcore::dary_tree_polynomial(d, depth);
  ordered_json roots = ordered_json::array();
  if (p.degree() >= 1)
    for (const auto& est : hardcore::polynomial_roots(p, precision))
      roots.push_back({{"re", est.value.real()},
                       {"im", est.value.imag()},
                       {"residual", est.residual},
                       {"in_ud", hardcore::ud_contains(est.value, d)},
                       {"in_new", hardcore::new_domain_contains(est.value, d)}});
  ordered_json j{{"delta", delta},
                 {"depth", depth},
                 {"degree", p.degree()},
                 {"roots", roots}};
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_check(const std::string& lambda_text, int delta,
              const std::string& region, double eps, double beta, double gamma,
              bool have_region, bool have_beta, bool have_gamma,
              const std::string& out_path) {
  hardcore::Complex lam = parse_complex(lambda_text);
  bool certificate = have_beta || have_gamma;
  if (have_region == certificate)
    throw hardcore::InputError(
        "choose either --region or the --beta/--gamma certificate");
  ordered_json j{{"lambda", complex_json(lam)}, {"delta", delta}};
  if (certificate) {
    if (!have_beta || !have_gamma)
      throw hardcore::InputError("certificate mode needs --beta and --gamma");
    auto margins = hardcore::certificate_margins(lam, beta, gamma, delta - 1);
    j["beta"] = beta;
    j["gamma"] = gamma;
    j["holds"] = margins.holds;
    j["left_margin"] = margins.left_margin;
    j["right_margin"] = margins.right_margin;
  } else {
    hardcore::RegionSpec spec{parse_region(region), delta, eps};
    spec.validate();
    j["region"] = region;
    j["inside"] = hardcore::region_contains(spec, lam);
    if (spec.kind == hardcore::RegionKind::ud) {
      auto m = hardcore::ud_membership(lam, delta - 1);
      j["boundary_distance"] =
          m.inside ? m.boundary_distance : -m.boundary_distance;
    } else {
      double alpha = lam == hardcore::Complex{0.0, 0.0} ? 0.0 : std::arg(lam);
      j["radial_margin"] =
          hardcore::region_radius_at(spec, std::fabs(alpha)) - std::abs(lam);
    }
  }
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_verify(const std::string& delta_range, const std::string& suite,
               std::uint64_t seed, const std::string& out_path) {
  hardcore::VerifyOptions opts;
  parse_delta_range(delta_range, opts.delta_min, opts.delta_max);
  opts.seed = seed;
  opts.exec = hardcore::Exec::parallel;
  auto suites = hardcore::run_suites(suite, opts);
  long total = 0;
  ordered_json rows = ordered_json::array();
  for (const auto& s : suites) {
    total += s.violations;
    rows.push_back({{"name", s.name},
                    {"checks", s.checks},
                    {"violations", s.violations},
                    {"failures", s.failures}});
  }
  ordered_json j{{"delta_min", opts.delta_min},
                 {"delta_max", opts.delta_max},
                 {"seed", seed},
                 {"suite", suite},
                 {"suites", rows},
                 {"violations", total}};
  emit(j.dump(2) + "\n", out_path);
  return total == 0 ? 0 : 1;
}

int cmd_orbit(const std::string& lambda_text, int delta, int depth, int budget,
              std::uint64_t seed, const std::string& out_path) {
  hardcore::Complex lam = parse_complex(lambda_text);
  if (delta < 2) throw hardcore::InputError("delta must be at least 2");
  auto report = hardcore::orbit_explore(lam, delta - 1, depth, budget, seed);
  ordered_json j{{"lambda", complex_json(lam)},
                 {"delta", delta},
                 {"depth", report.depth},
                 {"budget", budget},
                 {"seed", seed},
                 {"samples", report.samples},
                 {"min_distance", report.min_distance},
                 {"witness", complex_json(report.witness)}};
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"independence polynomial zero-free region toolkit"};
  app.require_subcommand(1);

  auto* regions = app.add_subcommand("regions", "region boundary data");
  regions->require_subcommand(1);
  auto* emit_cmd = regions->add_subcommand("emit", "emit boundary samples");
  int emit_delta = 10, emit_samples = 512;
  double emit_eps = 0.0;
  std::string emit_region = "new", emit_format = "csv", emit_out;
  emit_cmd->add_option("--delta", emit_delta, "maximal degree bound");
  emit_cmd->add_option("--region", emit_region,
                       "shearer | pr-eps | pr | ud | new | d1 | d2");
  emit_cmd->add_option("--samples", emit_samples, "boundary sample count");
  emit_cmd->add_option("--eps", emit_eps, "sector parameter for pr-eps");
  emit_cmd->add_option("--format", emit_format, "csv | json");
  emit_cmd->add_option("--out", emit_out, "output path (default stdout)");

  auto* poly = app.add_subcommand("poly", "independence polynomial of a graph");
  std::string poly_graph, poly_mode = "compute", poly_out;
  double poly_precision = 1e-12;
  poly->add_option("--graph", poly_graph, "edge list file")->required();
  poly->add_option("--mode", poly_mode, "compute | roots");
  poly->add_option("--precision", poly_precision, "root residual tolerance");
  poly->add_option("--out", poly_out, "output path (default stdout)");

  auto* tree = app.add_subcommand("tree", "complete (delta-1)-ary trees");
  int tree_delta = 3, tree_depth = 0;
  std::string tree_mode = "gen", tree_out;
  double tree_precision = 1e-12;
  tree->add_option("--delta", tree_delta, "maximal degree bound");
  tree->add_option("--depth", tree_depth, "leaf depth")->required();
  tree->add_option("--mode", tree_mode, "gen | zeros");
  tree->add_option("--precision", tree_precision, "root residual tolerance");
  tree->add_option("--out", tree_out, "output path (default stdout)");

  auto* check = app.add_subcommand("check", "membership and certificates");
  std::string check_lambda, check_region, check_out;
  int check_delta = 3;
  double check_eps = 0.0, check_beta = 0.0, check_gamma = 0.0;
  check->add_option("--lambda", check_lambda, "activity as re,im")->required();
  check->add_option("--delta", check_delta, "maximal degree bound");
  auto* check_region_opt = check->add_option(
      "--region", check_region, "shearer | pr-eps | pr | ud | new | d1 | d2");
  check->add_option("--eps", check_eps, "sector parameter for pr-eps");
  auto* check_beta_opt =
      check->add_option("--beta", check_beta, "certificate lower half-angle");
  auto* check_gamma_opt =
      check->add_option("--gamma", check_gamma, "certificate upper half-angle");
  check->add_option("--out", check_out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string verify_delta = "3..12", verify_suite = "all", verify_out;
  std::uint64_t verify_seed = 1;
  verify->add_option("--delta", verify_delta, "delta range, e.g. 3..12");
  verify->add_option(
      "--suite", verify_suite,
      "all | inequalities | regions | divisibility | zerofree");
  verify->add_option("--seed", verify_seed, "corpus seed");
  verify->add_option("--out", verify_out, "output path (default stdout)");

  auto* orbit = app.add_subcommand("orbit", "explore the self-generated set");
  std::string orbit_lambda, orbit_out;
  int orbit_delta = 3, orbit_depth = 8, orbit_budget = 64;
  std::uint64_t orbit_seed = 1;
  orbit->add_option("--lambda", orbit_lambda, "activity as re,im")->required();
  orbit->add_option("--delta", orbit_delta, "maximal degree bound");
  orbit->add_option("--depth", orbit_depth, "levels to generate");
  orbit->add_option("--budget", orbit_budget, "tuples per level");
  orbit->add_option("--seed", orbit_seed, "sampling seed");
  orbit->add_option("--out", orbit_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (emit_cmd->parsed())
      return cmd_regions_emit(emit_delta, emit_region, emit_samples, emit_eps,
                              emit_format, emit_out);
    if (poly->parsed())
      return cmd_poly(poly_graph, poly_mode, poly_precision, poly_out);
    if (tree->parsed())
      return cmd_tree(tree_delta, tree_depth, tree_mode, tree_precision,
                      tree_out);
    if (check->parsed())
      return cmd_check(check_lambda, check_delta, check_region, check_eps,
                       check_beta, check_gamma, check_region_opt->count() > 0,
                       check_beta_opt->count() > 0,
                       check_gamma_opt->count() > 0, check_out);
    if (verify->parsed())
      return cmd_verify(verify_delta, verify_suite, verify_seed, verify_out);
    if (orbit->parsed())
      return cmd_orbit(orbit_lambda, orbit_delta, orbit_depth, orbit_budget,
                       orbit_seed, orbit_out);
  } catch (const hardcore::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hardcore::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
