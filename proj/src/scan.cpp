#include "cuboidcurves/scan.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cuboidcurves/cubic.hpp"
#include "cuboidcurves/errors.hpp"

namespace cuboidcurves {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

std::vector<Rat> parse_range_values(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw ParseError("range must be start:stop:step, got '" + text + "'");
    }
    const Rat start = rat_from_string(parts[0]);
    const Rat stop = rat_from_string(parts[1]);
    const Rat step = rat_from_string(parts[2]);
    if (step == 0) throw ParseError("range step must be nonzero");
    std::vector<Rat> values;
    if (step > 0) {
      for (Rat v = start; v <= stop; v += step) values.push_back(v);
    } else {
      for (Rat v = start; v >= stop; v += step) values.push_back(v);
    }
    return values;
  }
  std::vector<Rat> values;
  for (const std::string& token : split(text, ',')) {
    values.push_back(rat_from_string(token));
  }
  return values;
}

namespace {

BranchReport make_branch_report(int branch, const Rat& q, const Rat& p,
                                const Rat& d, std::uint64_t search_limit) {
  BranchReport report;
  report.q = q;
  report.p = p;
  report.d = d;
  report.mn = normalize_conic(ConicSpec{q}).product();
  report.conic_rational = legendre_solvable(report.mn);
  if (report.conic_rational) {
    const PointSearchResult search = find_conic_point(ConicSpec{q}, search_limit);
    report.conic_point = search.point;
    report.point_search_capped = search.capped;
  }
  report.sextic_roots = sextic_rational_roots(d);
  (void)branch;
  return report;
}

}  // namespace

ScanRow compute_row(const Rat& b, const Rat& c, FormulaVariant variant,
                    std::uint64_t point_search_limit) {
  ScanRow row;
  row.b = b;
  row.c = c;
  row.singular_factors = singular_locus_check(ParameterPoint{b, c});
  if (!row.singular_factors.empty()) {
    row.singular = true;
    return row;
  }

  const ParameterPoint point{b, c};
  const MultisymmetricProfile profile = elementary_profile(point, variant);
  if (!check_master_identity(profile.e10, profile.e01, profile.e11,
                             profile.big_l)) {
    throw VerificationError("profile violates the master identity at (b,c) = (" +
                            rat_to_string(b) + "," + rat_to_string(c) + ")");
  }
  const CurvePair pair = curve_pair(point);
  if (pair.d1 * pair.q1 * pair.q1 * pair.q1 + pair.p1 * pair.p1 != 0 ||
      pair.d2 * pair.q2 * pair.q2 * pair.q2 + pair.p2 * pair.p2 != 0 ||
      d1_direct(point) != pair.d1 || d2_direct(point) != pair.d2) {
    throw VerificationError("curve data violates the cube-square structure");
  }

  row.branch1 = make_branch_report(1, pair.q1, pair.p1, pair.d1, point_search_limit);
  row.branch2 = make_branch_report(2, pair.q2, pair.p2, pair.d2, point_search_limit);
  for (const BranchReport* branch : {&*row.branch1, &*row.branch2}) {
    const int index = branch == &*row.branch1 ? 1 : 2;
    for (const Rat& w : branch->sextic_roots) {
      if (w == 1 || w == -1) continue;  // exceptional base points, no lift
      const Rat alpha = lift_alpha(branch->q, branch->p, w);
      row.lifted_alphas.push_back(LiftedAlphaEntry{index, w, alpha});
    }
  }
  return row;
}

namespace {

ordered_json rat_list(const std::vector<Rat>& values) {
  ordered_json list = ordered_json::array();
  for (const Rat& v : values) list.push_back(rat_to_string(v));
  return list;
}

ordered_json point_or_null(const std::optional<ConicPoint>& point) {
  if (!point) return nullptr;
  return ordered_json{{"w", rat_to_string(point->w)},
                      {"alpha", rat_to_string(point->alpha)}};
}

ordered_json row_to_json(const ScanRow& row) {
  ordered_json j;
  j["type"] = "row";
  j["b"] = rat_to_string(row.b);
  j["c"] = rat_to_string(row.c);
  j["status"] = row.singular ? "singular" : "ok";
  j["singular_factors"] = row.singular_factors;
  if (row.singular) {
    for (const char* key :
         {"Q1", "Q2", "MN1", "MN2", "conic1_rational", "conic2_rational"}) {
      j[key] = nullptr;
    }
    j["conic1_point"] = nullptr;
    j["conic2_point"] = nullptr;
    j["conic1_capped"] = false;
    j["conic2_capped"] = false;
    j["sextic1_roots"] = ordered_json::array();
    j["sextic2_roots"] = ordered_json::array();
    j["lifted_alphas"] = ordered_json::array();
    return j;
  }
  j["Q1"] = rat_to_string(row.branch1->q);
  j["Q2"] = rat_to_string(row.branch2->q);
  j["MN1"] = int_to_string(row.branch1->mn);
  j["MN2"] = int_to_string(row.branch2->mn);
  j["conic1_rational"] = row.branch1->conic_rational;
  j["conic2_rational"] = row.branch2->conic_rational;
  j["conic1_point"] = point_or_null(row.branch1->conic_point);
  j["conic2_point"] = point_or_null(row.branch2->conic_point);
  j["conic1_capped"] = row.branch1->point_search_capped;
  j["conic2_capped"] = row.branch2->point_search_capped;
  j["sextic1_roots"] = rat_list(row.branch1->sextic_roots);
  j["sextic2_roots"] = rat_list(row.branch2->sextic_roots);
  ordered_json lifts = ordered_json::array();
  for (const LiftedAlphaEntry& entry : row.lifted_alphas) {
    lifts.push_back(ordered_json{{"branch", entry.branch},
                                 {"w", rat_to_string(entry.w)},
                                 {"alpha", rat_to_string(entry.alpha)}});
  }
  j["lifted_alphas"] = lifts;
  return j;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n/;") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string join_rats(const std::vector<Rat>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += rat_to_string(values[i]);
  }
  return out;
}

const char* kCsvColumns =
    "b,c,status,singular_factors,Q1,Q2,MN1,MN2,"
    "conic1_rational,conic1_w,conic1_alpha,conic1_capped,"
    "conic2_rational,conic2_w,conic2_alpha,conic2_capped,"
    "sextic1_roots,sextic2_roots,lifted_alphas";

std::string row_to_csv(const ScanRow& row) {
  std::vector<std::string> fields;
  fields.push_back(rat_to_string(row.b));
  fields.push_back(rat_to_string(row.c));
  fields.push_back(row.singular ? "singular" : "ok");
  std::string factors;
  for (std::size_t i = 0; i < row.singular_factors.size(); ++i) {
    if (i) factors += ';';
    factors += row.singular_factors[i];
  }
  fields.push_back(factors);
  auto branch_fields = [&](const std::optional<BranchReport>& branch,
                           std::string* q, std::string* mn) {
    *q = branch ? rat_to_string(branch->q) : "";
    *mn = branch ? int_to_string(branch->mn) : "";
  };
  std::string q1, mn1, q2, mn2;
  branch_fields(row.branch1, &q1, &mn1);
  branch_fields(row.branch2, &q2, &mn2);
  fields.push_back(q1);
  fields.push_back(q2);
  fields.push_back(mn1);
  fields.push_back(mn2);
  for (const std::optional<BranchReport>& branch : {row.branch1, row.branch2}) {
    if (!branch) {
      fields.insert(fields.end(), {"", "", "", ""});
      continue;
    }
    fields.push_back(branch->conic_rational ? "true" : "false");
    fields.push_back(branch->conic_point ? rat_to_string(branch->conic_point->w)
                                         : "");
    fields.push_back(
        branch->conic_point ? rat_to_string(branch->conic_point->alpha) : "");
    fields.push_back(branch->point_search_capped ? "true" : "false");
  }
  fields.push_back(row.branch1 ? join_rats(row.branch1->sextic_roots) : "");
  fields.push_back(row.branch2 ? join_rats(row.branch2->sextic_roots) : "");
  std::string lifts;
  for (std::size_t i = 0; i < row.lifted_alphas.size(); ++i) {
    if (i) lifts += ';';
    const LiftedAlphaEntry& entry = row.lifted_alphas[i];
    lifts += std::to_string(entry.branch) + ":" + rat_to_string(entry.w) + ":" +
             rat_to_string(entry.alpha);
  }
  fields.push_back(lifts);

  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  return line;
}

const char* variant_name(FormulaVariant variant) {
  return variant == FormulaVariant::printed ? "printed" : "corrected";
}

std::string serialize_row(const ScanRow& row, OutputFormat format) {
  if (format == OutputFormat::csv) return row_to_csv(row);
  return row_to_json(row).dump();
}

void update_summary(ScanSummary& summary, const ScanRow& row) {
  if (row.singular) {
    ++summary.singular;
    return;
  }
  if (row.branch1->conic_rational) ++summary.conic1_rational;
  if (row.branch2->conic_rational) ++summary.conic2_rational;
  if (!row.branch1->sextic_roots.empty() || !row.branch2->sextic_roots.empty()) {
    ++summary.sextic_roots_found;
  }
}

}  // namespace

ScanSummary scan_grid(const ScanConfig& config, std::ostream& out) {
  if (config.workers == 0) throw Error("scan_grid: need at least one worker");

  if (config.format == OutputFormat::json_lines) {
    ordered_json header;
    header["type"] = "header";
    header["tool"] = "cuboidcurves";
    header["version"] = "1.0";
    header["variant"] = variant_name(config.variant);
    header["b_range"] = config.b_spec;
    header["c_range"] = config.c_spec;
    header["format"] = "json-lines";
    header["point_search_limit"] = config.point_search_limit;
    out << header.dump() << '\n';
  } else {
    out << "# cuboidcurves scan version=1.0 variant=" << variant_name(config.variant)
        << " b-range=" << config.b_spec << " c-range=" << config.c_spec
        << " point-search-limit=" << config.point_search_limit << '\n'
        << kCsvColumns << '\n';
  }

  const std::size_t total = config.b_values.size() * config.c_values.size();
  ScanSummary summary;
  summary.rows = total;

  std::atomic<std::size_t> next_claim{0};
  std::mutex mutex;
  std::condition_variable turnstile;
  std::size_t next_emit = 0;
  bool aborted = false;
  std::exception_ptr first_error;

  auto worker = [&]() {
    for (;;) {
      const std::size_t index = next_claim.fetch_add(1);
      if (index >= total) return;
      {
        std::lock_guard lock(mutex);
        if (aborted) return;
      }
      std::string line;
      ScanRow row;
      try {
        const Rat& b = config.b_values[index / config.c_values.size()];
        const Rat& c = config.c_values[index % config.c_values.size()];
        row = compute_row(b, c, config.variant, config.point_search_limit);
        line = serialize_row(row, config.format);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!first_error) first_error = std::current_exception();
        aborted = true;
        turnstile.notify_all();
        return;
      }
      std::unique_lock lock(mutex);
      turnstile.wait(lock, [&] { return aborted || next_emit == index; });
      if (aborted) return;
      out << line << '\n';
      update_summary(summary, row);
      ++next_emit;
      turnstile.notify_all();
    }
  };

  {
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(config.workers, std::max<std::size_t>(total, 1));
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  if (config.format == OutputFormat::json_lines) {
    ordered_json footer;
    footer["type"] = "summary";
    footer["rows"] = summary.rows;
    footer["singular"] = summary.singular;
    footer["conic1_rational"] = summary.conic1_rational;
    footer["conic2_rational"] = summary.conic2_rational;
    footer["sextic_roots_found"] = summary.sextic_roots_found;
    out << footer.dump() << '\n';
  } else {
    out << "# summary rows=" << summary.rows << " singular=" << summary.singular
        << " conic1_rational=" << summary.conic1_rational
        << " conic2_rational=" << summary.conic2_rational
        << " sextic_roots_found=" << summary.sextic_roots_found << '\n';
  }
  return summary;
}

std::string report_point_json(const Rat& b, const Rat& c,
                              FormulaVariant variant,
                              std::uint64_t point_search_limit) {
  ordered_json report;
  report["tool"] = "cuboidcurves";
  report["b"] = rat_to_string(b);
  report["c"] = rat_to_string(c);
  report["variant"] = variant_name(variant);

  const ScanRow row = compute_row(b, c, variant, point_search_limit);
  report["status"] = row.singular ? "singular" : "ok";
  report["singular_factors"] = row.singular_factors;
  if (row.singular) return report.dump(2);

  const ParameterPoint point{b, c};
  const MultisymmetricProfile profile = elementary_profile(point, variant);
  ordered_json prof;
  prof["E10"] = rat_to_string(profile.e10);
  prof["E20"] = rat_to_string(profile.e20);
  prof["E30"] = rat_to_string(profile.e30);
  prof["E01"] = rat_to_string(profile.e01);
  prof["E02"] = rat_to_string(profile.e02);
  prof["E03"] = rat_to_string(profile.e03);
  prof["E21"] = rat_to_string(profile.e21);
  prof["E11"] = rat_to_string(profile.e11);
  prof["E12"] = rat_to_string(profile.e12);
  prof["L"] = rat_to_string(profile.big_l);
  report["profile"] = prof;
  report["master_identity"] = check_master_identity(profile.e10, profile.e01,
                                                    profile.e11, profile.big_l);

  auto branch_json = [&](const BranchReport& branch) {
    ordered_json j;
    j["Q"] = rat_to_string(branch.q);
    j["P"] = rat_to_string(branch.p);
    j["D"] = rat_to_string(branch.d);
    j["MN"] = int_to_string(branch.mn);
    j["conic_rational"] = branch.conic_rational;
    j["conic_point"] = point_or_null(branch.conic_point);
    j["point_search_capped"] = branch.point_search_capped;
    if (branch.p == 0) {
      j["mordell_k"] = nullptr;
    } else {
      j["mordell_k"] = rat_to_string(mordell_form(CubicCurveSpec{branch.p}).k());
    }
    j["sextic_roots"] = rat_list(branch.sextic_roots);
    return j;
  };
  report["branch1"] = branch_json(*row.branch1);
  report["branch2"] = branch_json(*row.branch2);

  ordered_json lifts = ordered_json::array();
  for (const LiftedAlphaEntry& entry : row.lifted_alphas) {
    const ReducedCubicRoots roots = reduced_cubic_roots(entry.w);
    const Rat d_value = sextic_d_from_w(entry.w);
    for (const Rat& y : {roots.y1, roots.y2, roots.y3}) {
      if (y * y * y + y * y + d_value != 0) {
        throw VerificationError("reduced-cubic root failed y^3+y^2+D = 0");
      }
    }
    lifts.push_back(ordered_json{
        {"branch", entry.branch},
        {"w", rat_to_string(entry.w)},
        {"alpha", rat_to_string(entry.alpha)},
        {"reduced_cubic_roots",
         rat_list({roots.y1, roots.y2, roots.y3})}});
  }
  report["lifts"] = lifts;
  return report.dump(2);
}

CuboidWitness parse_witness(const std::string& text) {
  const auto parts = split(text, ',');
  static const char* kFields[] = {"x1", "x2", "x3", "d1", "d2", "d3", "L"};
  if (parts.size() != 7) {
    throw ParseError("witness must have 7 comma-separated values "
                     "x1,x2,x3,d1,d2,d3,L");
  }
  Rat values[7];
  for (int i = 0; i < 7; ++i) {
    try {
      values[i] = rat_from_string(parts[i]);
    } catch (const ParseError& err) {
      throw ParseError(std::string("field ") + kFields[i] + ": " + err.what());
    }
  }
  return CuboidWitness{values[0], values[1], values[2], values[3],
                       values[4], values[5], values[6]};
}

const char* witness_class_name(WitnessClass value) {
  switch (value) {
    case WitnessClass::full_solution:
      return "full-solution";
    case WitnessClass::factor_only:
      return "factor-only";
    case WitnessClass::non_solution:
      return "non-solution";
  }
  return "?";
}

std::string verify_witness_json(const CuboidWitness& witness) {
  ordered_json report;
  report["witness"] = ordered_json{
      {"x1", rat_to_string(witness.x1)}, {"x2", rat_to_string(witness.x2)},
      {"x3", rat_to_string(witness.x3)}, {"d1", rat_to_string(witness.d1)},
      {"d2", rat_to_string(witness.d2)}, {"d3", rat_to_string(witness.d3)},
      {"L", rat_to_string(witness.big_l)}};
  const CuboidPolynomials p = eval_cuboid_polynomials(witness);
  report["p_values"] = ordered_json{{"p0", rat_to_string(p.p0)},
                                    {"p1", rat_to_string(p.p1)},
                                    {"p2", rat_to_string(p.p2)},
                                    {"p3", rat_to_string(p.p3)}};
  static const char* kNames[] = {"p0",        "sum p_i",       "sum d_i p_i",
                                 "sum x_i p_i", "sum d_i^2 p_i", "sum x_i^2 p_i",
                                 "sum x_i d_i p_i", "sum x_i^2 d_i^2 p_i"};
  ordered_json equations = ordered_json::array();
  bool all_hold = true;
  const std::array<Rat, 8> values = factor_equation_values(witness);
  for (int i = 0; i < 8; ++i) {
    const bool ok = values[static_cast<std::size_t>(i)] == 0;
    all_hold = all_hold && ok;
    equations.push_back(
        ordered_json{{"equation", kNames[i]},
                     {"value", rat_to_string(values[static_cast<std::size_t>(i)])},
                     {"holds", ok}});
  }
  report["factor_equations"] = equations;
  report["all_factor_equations_hold"] = all_hold;
  report["classification"] = witness_class_name(theorem_1_1_gate(witness));
  return report.dump(2);
}

}  // namespace cuboidcurves
