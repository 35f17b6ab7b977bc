// Command-line front end: single-point reports, grid scans, Legendre-form
// queries, conic classification and witness verification.
//
// Exit codes: 0 success, 1 usage/parse error, 2 internal verification
// failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuboidcurves/conic.hpp"
#include "cuboidcurves/errors.hpp"
#include "cuboidcurves/scan.hpp"

using namespace cuboidcurves;
using ordered_json = nlohmann::ordered_json;

namespace {

FormulaVariant parse_variant(const std::string& name) {
  if (name == "printed") return FormulaVariant::printed;
  if (name == "corrected") return FormulaVariant::corrected;
  throw ParseError("variant must be 'printed' or 'corrected'");
}

int run(int argc, char** argv) {
  CLI::App app{"rational and elliptic curves attached to the cuboid factor equations"};
  app.require_subcommand(1);

  // report
  auto* report = app.add_subcommand("report", "full classification of one parameter point");
  std::string report_b, report_c, report_variant = "printed";
  std::uint64_t report_limit = 2000000;
  report->add_option("--b", report_b, "parameter b, exact rational p/q")->required();
  report->add_option("--c", report_c, "parameter c, exact rational p/q")->required();
  report->add_option("--variant", report_variant, "formula variant: printed|corrected");
  report->add_option("--point-search-limit", report_limit, "conic point search budget");

  // scan
  auto* scan = app.add_subcommand("scan", "classify a grid of parameter points");
  std::string scan_b, scan_c, scan_format = "json-lines", scan_variant = "printed";
  unsigned scan_workers = 1;
  std::uint64_t scan_limit = 2000000;
  scan->add_option("--b-range", scan_b, "b values, start:stop:step or v1,v2,...")->required();
  scan->add_option("--c-range", scan_c, "c values, start:stop:step or v1,v2,...")->required();
  scan->add_option("--format", scan_format, "output format: json-lines|csv");
  scan->add_option("--variant", scan_variant, "formula variant: printed|corrected");
  scan->add_option("--workers", scan_workers, "worker threads (output is identical for any count)");
  scan->add_option("--point-search-limit", scan_limit, "conic point search budget per cell");

  // legendre
  auto* legendre = app.add_subcommand("legendre", "solvability of X^2 - MN Y^2 + 3 Z^2 = 0");
  std::string legendre_mn;
  legendre->add_option("--mn", legendre_mn, "square-free integer MN")->required();

  // conic
  auto* conic = app.add_subcommand("conic", "classify the conic w^2 + 3 = Q alpha^2");
  std::string conic_q;
  std::uint64_t conic_limit = 2000000;
  conic->add_option("--q", conic_q, "coefficient Q, exact rational")->required();
  conic->add_option("--point-search-limit", conic_limit, "point search budget");

  // verify
  auto* verify = app.add_subcommand("verify", "check a cuboid witness against the factor equations");
  std::string witness_text;
  verify->add_option("--witness", witness_text, "x1,x2,x3,d1,d2,d3,L")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // CLI11 prints usage; nonzero on error
  }

  if (*report) {
    std::cout << report_point_json(rat_from_string(report_b),
                                   rat_from_string(report_c),
                                   parse_variant(report_variant), report_limit)
              << '\n';
    return 0;
  }
  if (*scan) {
    ScanConfig config;
    config.b_values = parse_range_values(scan_b);
    config.c_values = parse_range_values(scan_c);
    config.b_spec = scan_b;
    config.c_spec = scan_c;
    if (scan_format == "json-lines") {
      config.format = OutputFormat::json_lines;
    } else if (scan_format == "csv") {
      config.format = OutputFormat::csv;
    } else {
      throw ParseError("format must be 'json-lines' or 'csv'");
    }
    config.variant = parse_variant(scan_variant);
    if (scan_workers == 0) throw ParseError("--workers must be at least 1");
    config.workers = scan_workers;
    config.point_search_limit = scan_limit;
    scan_grid(config, std::cout);
    return 0;
  }
  if (*legendre) {
    const Int mn(legendre_mn, 10);
    ordered_json out;
    out["mn"] = int_to_string(mn);
    out["solvable"] = legendre_solvable(mn);
    const auto solution = solve_legendre(mn);
    out["solution"] =
        solution ? ordered_json{{"X", int_to_string(solution->x)},
                                {"Y", int_to_string(solution->y)},
                                {"Z", int_to_string(solution->z)}}
                 : ordered_json(nullptr);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (*conic) {
    const ConicSpec spec{rat_from_string(conic_q)};
    const LegendreForm form = normalize_conic(spec);
    ordered_json out;
    out["Q"] = rat_to_string(spec.q);
    out["legendre_form"] = ordered_json{{"M", int_to_string(form.M)},
                                        {"N", int_to_string(form.N)},
                                        {"m", int_to_string(form.m)},
                                        {"n", int_to_string(form.n)}};
    out["MN"] = int_to_string(form.product());
    const bool solvable = form.product() > 0 && legendre_solvable(form.product());
    out["rational"] = solvable;
    const PointSearchResult search = find_conic_point(spec, conic_limit);
    out["point"] = search.point
                       ? ordered_json{{"w", rat_to_string(search.point->w)},
                                      {"alpha", rat_to_string(search.point->alpha)}}
                       : ordered_json(nullptr);
    out["point_search_capped"] = search.capped;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (*verify) {
    std::cout << verify_witness_json(parse_witness(witness_text)) << '\n';
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const VerificationError& err) {
    std::cerr << "internal verification failure: " << err.what() << '\n';
    return 2;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
