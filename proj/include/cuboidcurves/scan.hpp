/**
 * @file scan.hpp
 * @brief Grid scans, single-point reports and witness verification with
 *        deterministic structured output (JSON-lines or CSV). Every numeric
 *        claim is re-verified against its defining equation before emission;
 *        a failed re-check raises VerificationError.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cuboidcurves/conic.hpp"
#include "cuboidcurves/cuboid.hpp"
#include "cuboidcurves/parametrization.hpp"

namespace cuboidcurves {

enum class OutputFormat { json_lines, csv };

/// Values of "a:b:s" (inclusive endpoints, exact rational step) or an
/// explicit comma-separated list. Throws ParseError on malformed text or a
/// zero step.
std::vector<Rat> parse_range_values(const std::string& text);

struct ScanConfig {
  std::vector<Rat> b_values;
  std::vector<Rat> c_values;
  std::string b_spec;  // original text, echoed in the output header
  std::string c_spec;
  OutputFormat format = OutputFormat::json_lines;
  FormulaVariant variant = FormulaVariant::printed;
  unsigned workers = 1;
  std::uint64_t point_search_limit = 2000000;
};

struct LiftedAlphaEntry {
  int branch;
  Rat w;
  Rat alpha;
};

struct BranchReport {
  Rat q, p, d;
  Int mn;
  bool conic_rational = false;
  std::optional<ConicPoint> conic_point;
  bool point_search_capped = false;
  std::vector<Rat> sextic_roots;
};

struct ScanRow {
  Rat b, c;
  bool singular = false;
  std::vector<std::string> singular_factors;
  std::optional<BranchReport> branch1, branch2;
  std::vector<LiftedAlphaEntry> lifted_alphas;
};

struct ScanSummary {
  std::uint64_t rows = 0;
  std::uint64_t singular = 0;
  std::uint64_t conic1_rational = 0;
  std::uint64_t conic2_rational = 0;
  std::uint64_t sextic_roots_found = 0;
};

/// Full classification of one grid cell; all claims verified.
ScanRow compute_row(const Rat& b, const Rat& c, FormulaVariant variant,
                    std::uint64_t point_search_limit);

/// Scans the grid row-major over b then c; rows are computed by a bounded
/// worker pool and emitted in index order, so output is byte-identical for
/// any worker count. Emits a header line, one line per cell and a summary
/// line.
ScanSummary scan_grid(const ScanConfig& config, std::ostream& out);

/// Pretty-printed single-point report: singular factors, profile and
/// master-identity check, curve data, conic classifications, Mordell
/// parameters, sextic roots and alpha-lifts with reduced-cubic roots.
std::string report_point_json(const Rat& b, const Rat& c,
                              FormulaVariant variant,
                              std::uint64_t point_search_limit);

/// Parses "x1,x2,x3,d1,d2,d3,L"; ParseError names the offending field.
CuboidWitness parse_witness(const std::string& text);

/// Verification report: p-values, per-equation factor check, gate result.
std::string verify_witness_json(const CuboidWitness& witness);

const char* witness_class_name(WitnessClass value);

}  // namespace cuboidcurves
