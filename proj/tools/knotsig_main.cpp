// Copyright 2026 The Knotsig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface: exact L2 signatures, signature profiles, the 2s(n)
// plot series, slice verdicts, and the cross-route verification sweeps.
// Reports are deterministic byte-for-byte: JSON lines or RFC 4180 CSV on
// stdout (or --output), timings on stderr only.
//
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotsig/knotsig.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace knotsig;

constexpr const char* kCrLf = "\r\n";

std::string decimal_of_point(const UnitCirclePoint& x) { return decimal_string(x.value()); }

struct OutputTarget {
  std::ostream* stream = &std::cout;
  std::ofstream file;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    stream = &file;
  }
};

int run_l2(long p, long q, const std::string& route, const std::string& format,
           OutputTarget& out) {
  const TorusKnotParams params(p, q);
  ordered_json record;
  record["schema"] = "knotsig.l2/1";
  record["p"] = p;
  record["q"] = q;
  record["route"] = route;

  Rational value;
  bool agreement = true;
  if (route == "all") {
    const Rational closed = l2_torus(params, L2Route::closed);
    const Rational weighted = l2_torus(params, L2Route::weighted);
    const Rational profiled = l2_torus(params, L2Route::profile);
    agreement = closed == weighted && closed == profiled;
    record["closed"] = fraction_string(closed);
    record["weighted"] = fraction_string(weighted);
    record["profile"] = fraction_string(profiled);
    record["agreement"] = agreement;
    value = closed;
  } else {
    L2Route r;
    if (route == "closed") r = L2Route::closed;
    else if (route == "weighted") r = L2Route::weighted;
    else if (route == "profile") r = L2Route::profile;
    else throw std::domain_error("unknown route: " + route);
    value = l2_torus(params, r);
  }
  record["value"] = fraction_string(value);
  record["value_decimal"] = decimal_string(value);

  if (format == "json") {
    *out.stream << record.dump() << "\n";
  } else if (format == "csv") {
    *out.stream << "p,q,route,value,value_decimal,agreement" << kCrLf << p << "," << q << ","
                << route << "," << fraction_string(value) << "," << decimal_string(value) << ","
                << (agreement ? "true" : "false") << kCrLf;
  } else {
    throw std::domain_error("unknown format: " + format);
  }
  return agreement ? 0 : 1;
}

int run_profile(long p, long q, const std::string& format, OutputTarget& out) {
  const TorusKnotParams params(p, q);
  const SignatureProfile profile = torus_jump_profile(params);
  const std::vector<long> sectors = profile.sector_signatures();

  if (format == "json") {
    ordered_json record;
    record["schema"] = "knotsig.profile/1";
    record["p"] = p;
    record["q"] = q;
    auto breakpoints = ordered_json::array();
    auto decimals = ordered_json::array();
    for (const auto& x : profile.breakpoints) {
      breakpoints.push_back(fraction_string(x.value()));
      decimals.push_back(decimal_of_point(x));
    }
    record["breakpoints"] = breakpoints;
    record["breakpoints_decimal"] = decimals;
    record["jumps"] = profile.jumps;
    record["sectors"] = sectors;
    *out.stream << record.dump() << "\n";
  } else if (format == "csv") {
    *out.stream << "x,x_decimal,jump,sigma_left,sigma_right" << kCrLf;
    long cum = 0;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      const long left = 2 * cum;
      cum += profile.jumps[k];
      *out.stream << fraction_string(profile.breakpoints[k].value()) << ","
                  << decimal_of_point(profile.breakpoints[k]) << "," << profile.jumps[k] << ","
                  << left << "," << 2 * cum << kCrLf;
    }
  } else {
    throw std::domain_error("unknown format: " + format);
  }
  return 0;
}

void render_svg(const std::vector<long>& doubled, long pq, std::ostream& os) {
  const int width = 800, height = 400, margin = 50;
  long ymin = 0, ymax = 0;
  for (long v : doubled) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  if (ymax == ymin) ymax = ymin + 1;
  const double xspan = static_cast<double>(pq);
  const double yspan = static_cast<double>(ymax - ymin);
  auto sx = [&](double n) { return margin + n / xspan * (width - 2 * margin); };
  auto sy = [&](double v) { return height - margin - (v - ymin) / yspan * (height - 2 * margin); };
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  // axes: x at y = 0 (2s = 0), y at n = 0
  os << "  <line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(sx(xspan))
     << "\" y2=\"" << fmt(sy(0)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "  <line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(ymin)) << "\" x2=\"" << fmt(sx(0))
     << "\" y2=\"" << fmt(sy(ymax)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "  <polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
  os << fmt(sx(0)) << "," << fmt(sy(0));
  for (std::size_t i = 0; i < doubled.size(); ++i)
    os << " " << fmt(sx(static_cast<double>(i + 1))) << ","
       << fmt(sy(static_cast<double>(doubled[i])));
  os << "\"/>\n";
  os << "  <text x=\"" << fmt(sx(xspan)) << "\" y=\"" << fmt(sy(0) + 16)
     << "\" font-size=\"12\" text-anchor=\"end\">n = " << pq << "</text>\n";
  os << "  <text x=\"" << fmt(sx(0) - 6) << "\" y=\"" << fmt(sy(ymin))
     << "\" font-size=\"12\" text-anchor=\"end\">" << ymin << "</text>\n";
  os << "  <text x=\"" << fmt(sx(0) - 6) << "\" y=\"" << fmt(sy(ymax) + 10)
     << "\" font-size=\"12\" text-anchor=\"end\">" << ymax << "</text>\n";
  os << "  <text x=\"" << fmt(sx(0) - 6) << "\" y=\"" << fmt(sy(0))
     << "\" font-size=\"12\" text-anchor=\"end\">2s</text>\n";
  os << "</svg>\n";
}

int run_introplot(long p, long q, const std::string& format, OutputTarget& out) {
  const TorusKnotParams params(p, q);
  const std::vector<long> doubled = partial_sum_series_doubled(params);
  if (format == "csv") {
    *out.stream << "n,2s" << kCrLf;
    for (std::size_t i = 0; i < doubled.size(); ++i)
      *out.stream << (i + 1) << "," << doubled[i] << kCrLf;
  } else if (format == "svg") {
    render_svg(doubled, params.pq(), *out.stream);
  } else {
    throw std::domain_error("unknown format: " + format);
  }
  return 0;
}

ordered_json verdict_json(const SliceVerdict& verdict) {
  ordered_json witness = ordered_json::object();
  if (verdict.signature_witness) {
    witness["x"] = fraction_string(verdict.signature_witness->first.value());
    witness["sigma"] = verdict.signature_witness->second;
  }
  if (verdict.fox_milnor_witness) witness["discriminant"] = verdict.fox_milnor_witness->get_str();
  if (verdict.l2_witness) {
    witness["m"] = verdict.l2_witness->first;
    witness["l2"] = fraction_string(verdict.l2_witness->second);
    witness["l2_decimal"] = decimal_string(verdict.l2_witness->second);
  }
  return witness;
}

int run_slice_twist(long n, long precision_bits, const std::string& format, OutputTarget& out) {
  PrecisionOptions opts;
  opts.max_bits = precision_bits;
  const SliceVerdict verdict = twist_verdict(n, opts);
  if (format == "json") {
    ordered_json record;
    record["schema"] = "knotsig.slice/1";
    record["subject"] = "twist";
    record["n"] = n;
    record["verdict"] = obstruction_name(verdict.verdict);
    record["reason"] = verdict.reason;
    record["witness"] = verdict_json(verdict);
    *out.stream << record.dump() << "\n";
  } else if (format == "csv") {
    *out.stream << "subject,n,verdict,reason" << kCrLf << "twist," << n << ","
                << obstruction_name(verdict.verdict) << ",\"" << verdict.reason << "\"" << kCrLf;
  } else {
    throw std::domain_error("unknown format: " + format);
  }
  return 0;
}

int run_slice_double(const std::string& s_text, const std::string& format, OutputTarget& out) {
  const Rational s_K = parse_rational(s_text);
  const std::vector<Int> candidates = double_candidates(s_K);
  if (format == "json") {
    ordered_json record;
    record["schema"] = "knotsig.slice/1";
    record["subject"] = "double";
    record["s_K"] = fraction_string(s_K);
    record["s_K_decimal"] = decimal_string(s_K);
    auto list = ordered_json::array();
    for (const Int& n : candidates) list.push_back(n.get_str());
    record["candidates"] = list;
    record["note"] = candidates.empty()
                         ? "no n = m(m+1) is compatible with this L2 signature"
                         : "only D_n(K) with this n escapes the L2 obstruction";
    *out.stream << record.dump() << "\n";
  } else if (format == "csv") {
    *out.stream << "subject,s_K,candidates" << kCrLf << "double," << fraction_string(s_K) << ",";
    for (std::size_t i = 0; i < candidates.size(); ++i)
      *out.stream << (i ? ";" : "") << candidates[i].get_str();
    *out.stream << kCrLf;
  } else {
    throw std::domain_error("unknown format: " + format);
  }
  return 0;
}

int run_verify(long max, int jobs, bool inject_fault, long precision_bits,
               const std::string& format, OutputTarget& out) {
  VerifyOptions options;
  options.max = max;
  options.jobs = jobs;
  options.inject_fault = inject_fault;
  options.precision.max_bits = precision_bits;

  const auto started = std::chrono::steady_clock::now();
  const VerifyReport report = knotsig::run_verify(options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (format == "json") {
    for (const CheckOutcome& check : report.checks) {
      ordered_json record;
      record["schema"] = "knotsig.verify/1";
      record["record"] = "check";
      record["check"] = check.check;
      record["units"] = check.units;
      record["identities"] = check.identities;
      record["status"] = check.pass ? "pass" : "fail";
      if (!check.pass) record["counterexample"] = check.counterexample;
      *out.stream << record.dump() << "\n";
    }
    ordered_json summary;
    summary["schema"] = "knotsig.verify/1";
    summary["record"] = "summary";
    summary["max"] = max;
    summary["jobs"] = jobs;
    summary["checks"] = report.checks.size();
    summary["identities"] = report.identities;
    summary["status"] = report.pass ? "pass" : "fail";
    if (!report.pass) summary["counterexample"] = report.first_counterexample;
    *out.stream << summary.dump() << "\n";
  } else if (format == "csv") {
    *out.stream << "check,units,identities,status,counterexample" << kCrLf;
    for (const CheckOutcome& check : report.checks)
      *out.stream << check.check << "," << check.units << "," << check.identities << ","
                  << (check.pass ? "pass" : "fail") << ","
                  << (check.pass ? "" : "\"" + check.counterexample + "\"") << kCrLf;
    *out.stream << "summary," << "" << "," << report.identities << ","
                << (report.pass ? "pass" : "fail") << ","
                << (report.pass ? "" : "\"" + report.first_counterexample + "\"") << kCrLf;
  } else {
    throw std::domain_error("unknown format: " + format);
  }
  std::fprintf(stderr, "verify: %zu checks, %ld identities, %.3f s\n", report.checks.size(),
               report.identities, seconds);
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levine-Tristram omega-signatures, jump functions and L2 signatures\n"
               "of torus and twist knots, with exact cross-route verification."};
  app.require_subcommand(1);

  long p = 0, q = 0, twist_n = 0;
  long verify_max = 12;
  long precision_bits = 4096;
  int jobs = 1;
  bool inject_fault = false;
  std::string route = "all", format, output_path, double_s;

  auto* cmd_l2 = app.add_subcommand("l2", "L2 signature of the (p,q) torus knot");
  cmd_l2->add_option("p", p, "meridional winding")->required();
  cmd_l2->add_option("q", q, "longitudinal winding")->required();
  cmd_l2->add_option("--route", route, "closed|weighted|profile|all")
      ->default_val("all")
      ->check(CLI::IsMember({"closed", "weighted", "profile", "all"}));
  cmd_l2->add_option("--format", format, "json|csv")->default_val("json");
  cmd_l2->add_option("-o,--output", output_path, "write the report to a file");

  auto* cmd_profile = app.add_subcommand("profile", "signature step profile of T(p,q)");
  cmd_profile->add_option("p", p)->required();
  cmd_profile->add_option("q", q)->required();
  cmd_profile->add_option("--format", format, "json|csv")->default_val("json");
  cmd_profile->add_option("-o,--output", output_path, "write the report to a file");

  auto* cmd_introplot =
      app.add_subcommand("introplot", "the 2s(n) series of partial jump sums");
  cmd_introplot->add_option("p", p)->required();
  cmd_introplot->add_option("q", q)->required();
  cmd_introplot->add_option("--format", format, "csv|svg")->default_val("csv");
  cmd_introplot->add_option("-o,--output", output_path, "write the plot to a file");

  auto* cmd_slice = app.add_subcommand("slice", "slice obstructions");
  cmd_slice->require_subcommand(1);
  auto* cmd_twist = cmd_slice->add_subcommand("twist", "verdict for the twist knot K_n");
  cmd_twist->add_option("n", twist_n, "number of twists")->required();
  auto* cmd_double = cmd_slice->add_subcommand(
      "double", "twist coefficients n for which D_n(K) escapes the obstruction");
  cmd_double->add_option("s_K", double_s, "L2 signature of the companion knot, as a/b")
      ->required();
  cmd_slice->add_option("--format", format, "json|csv")->default_val("json");
  cmd_slice->add_option("--precision-bits", precision_bits, "inertia precision ceiling")
      ->default_val(4096);
  cmd_slice->add_option("-o,--output", output_path, "write the report to a file");

  auto* cmd_verify = app.add_subcommand("verify", "run all cross-route invariant sweeps");
  cmd_verify->add_option("--max", verify_max, "sweep bound on q")->default_val(12);
  cmd_verify->add_option("--jobs", jobs, "worker threads")->default_val(1);
  cmd_verify->add_option("--format", format, "json|csv")->default_val("json");
  cmd_verify->add_option("--precision-bits", precision_bits, "inertia precision ceiling")
      ->default_val(4096);
  cmd_verify->add_option("-o,--output", output_path, "write the report to a file");
  cmd_verify->add_flag("--inject-fault", inject_fault)->group("");  // testing hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    OutputTarget out;
    out.open(output_path);
    if (*cmd_l2) return run_l2(p, q, route, format, out);
    if (*cmd_profile) return run_profile(p, q, format, out);
    if (*cmd_introplot) return run_introplot(p, q, format, out);
    if (*cmd_twist) return run_slice_twist(twist_n, precision_bits, format, out);
    if (*cmd_double) return run_slice_double(double_s, format, out);
    if (*cmd_verify)
      return run_verify(verify_max, jobs, inject_fault, precision_bits, format, out);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
