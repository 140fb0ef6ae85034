// Copyright 2026 The qutrit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_out.hpp"
#include "qutrit/adjoint.hpp"
#include "qutrit/bloch.hpp"
#include "qutrit/contour.hpp"
#include "qutrit/density.hpp"
#include "qutrit/eigen3x3.hpp"
#include "qutrit/triangle.hpp"

namespace qutrit::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Malformed command-line or file input; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError("not a finite real number: '" + token + "'");
  }
  return v;
}

std::vector<double> split_reals(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) out.push_back(parse_real(tok));
  }
  return out;
}

// Where a command's input comes from: positional tokens, --stdin, or --input.
struct InputSource {
  std::vector<std::string> positional;
  bool from_stdin = false;
  std::string path;

  void attach(CLI::App* cmd, const std::string& positional_help) {
    cmd->add_option("values", positional, positional_help);
    cmd->add_flag("--stdin", from_stdin, "Read JSON input from standard input");
    cmd->add_option("--input", path, "Read JSON input from a file");
  }

  std::optional<nlohmann::json> json_document(std::istream& in) const {
    const int sources = (positional.empty() ? 0 : 1) + (from_stdin ? 1 : 0) + (path.empty() ? 0 : 1);
    if (sources > 1) throw UsageError("give input as arguments, --stdin or --input, not several");
    if (!from_stdin && path.empty()) return std::nullopt;
    try {
      if (from_stdin) return nlohmann::json::parse(in);
      std::ifstream file(path);
      if (!file) throw UsageError("cannot open input file '" + path + "'");
      return nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
  }
};

std::vector<double> json_reals(const nlohmann::json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected) {
    throw UsageError(std::string(what) + " must be an array of " + std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw UsageError(std::string(what) + " contains a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

Vec8 vec8_from(const std::vector<double>& v) {
  if (v.size() != 8) {
    throw UsageError("expected 8 Bloch components, got " + std::to_string(v.size()));
  }
  Vec8::Storage c{};
  std::copy(v.begin(), v.end(), c.begin());
  return Vec8(c);
}

Vec8 read_bloch(const InputSource& src, std::istream& in) {
  if (auto doc = src.json_document(in)) {
    const nlohmann::json& arr = doc->is_object() && doc->contains("bloch") ? (*doc)["bloch"] : *doc;
    return vec8_from(json_reals(arr, 8, "bloch vector"));
  }
  std::vector<double> v;
  for (const auto& tok : src.positional) v.push_back(parse_real(tok));
  return vec8_from(v);
}

Matrix3c read_matrix(const InputSource& src, std::istream& in) {
  Matrix3c m;
  if (auto doc = src.json_document(in)) {
    const nlohmann::json& rows = doc->is_object() && doc->contains("rho") ? (*doc)["rho"] : *doc;
    if (!rows.is_array() || rows.size() != 3) throw UsageError("rho must be a 3x3 array of [re, im] pairs");
    for (int r = 0; r < 3; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || row.size() != 3) throw UsageError("rho must be a 3x3 array of [re, im] pairs");
      for (int c = 0; c < 3; ++c) {
        const auto pair = json_reals(row[static_cast<std::size_t>(c)], 2, "matrix entry");
        m(r, c) = Complex{pair[0], pair[1]};
      }
    }
    return m;
  }
  if (src.positional.size() != 18) {
    throw UsageError("expected 18 reals (row-major re,im pairs), got " +
                     std::to_string(src.positional.size()));
  }
  for (int k = 0; k < 9; ++k) {
    m(k / 3, k % 3) = Complex{parse_real(src.positional[static_cast<std::size_t>(2 * k)]),
                              parse_real(src.positional[static_cast<std::size_t>(2 * k + 1)])};
  }
  return m;
}

Json to_json(const Vec8& n) {
  Json a = Json::array();
  for (double x : n.components()) a.push_back(x);
  return a;
}

Json to_json(const Matrix3c& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Json record(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Json& j) {
  write_json(out, j);
  out << '\n';
}

// --- commands -------------------------------------------------------------

int cmd_check(const InputSource& src, double tol, std::istream& in, std::ostream& out) {
  const Vec8 n = read_bloch(src, in);
  const auto q = mixed_state_constraints(n);
  const bool valid = is_mixed_state(n, tol);
  const auto eig = hermitian_eigenvalues(bloch_matrix(n));

  Json j = record("check");
  j["bloch"] = to_json(n);
  j["constraints"] = {{"norm_sq", q.norm_sq}, {"cubic", q.cubic}};
  j["valid"] = valid;
  j["pure"] = is_pure(n, tol);
  j["eigenvalues"] = Json::array({eig[0], eig[1], eig[2]});
  j["entropy"] = valid ? Json(entropy_of_mixing(from_bloch(n, tol))) : Json(nullptr);
  emit(out, j);
  return valid ? kOk : kDomain;
}

int cmd_convert(const std::string& direction, const InputSource& src, double tol, std::istream& in,
                std::ostream& out) {
  Json j = record("convert");
  j["direction"] = direction;
  if (direction == "bloch-to-rho") {
    const Density3 rho = from_bloch(read_bloch(src, in), tol);
    j["rho"] = to_json(rho.matrix());
  } else {
    const Density3 rho = Density3::from_matrix(read_matrix(src, in));
    j["bloch"] = to_json(to_bloch(rho));
  }
  emit(out, j);
  return kOk;
}

int cmd_triangle(int resolution, const std::string& format, double tol, std::ostream& out) {
  if (resolution < 2) throw UsageError("--resolution must be at least 2");
  const EntropyGrid grid = entropy_grid(resolution, tol);
  if (format == "csv") {
    out << "n3,n8,q1,q2,in_region,entropy\n";
    for (const auto& s : grid.samples) {
      out << format_double(s.point.n3) << ',' << format_double(s.point.n8) << ','
          << format_double(s.q.q1) << ',' << format_double(s.q.q2) << ','
          << (s.in_region ? "true" : "false") << ',';
      if (s.entropy) out << format_double(*s.entropy);
      out << '\n';
    }
    return kOk;
  }
  Json j = record("triangle");
  j["resolution"] = resolution;
  j["columns"] = Json::array({"n3", "n8", "q1", "q2", "in_region", "entropy"});
  Json rows = Json::array();
  for (const auto& s : grid.samples) {
    rows.push_back(Json::array({s.point.n3, s.point.n8, s.q.q1, s.q.q2, s.in_region,
                                s.entropy ? Json(*s.entropy) : Json(nullptr)}));
  }
  j["rows"] = std::move(rows);
  emit(out, j);
  return kOk;
}

int cmd_contour(const std::string& levels_arg, int resolution, std::ostream& out) {
  if (resolution < 2) throw UsageError("--resolution must be at least 2");
  const auto levels = split_reals(levels_arg);
  for (double level : levels) {
    if (!(level > 0.0 && level < 1.0)) {
      throw UsageError("contour level " + format_double(level) + " is outside (0, 1)");
    }
  }
  // Marching-squares interpolation error bound used as the acceptance slack.
  const double tol = 2.0 / resolution;
  Json j = record("contour");
  j["resolution"] = resolution;
  Json contours = Json::array();
  for (double level : levels) {
    Json polylines = Json::array();
    for (const auto& line : equi_entropy_contour(level, tol, resolution)) {
      Json pts = Json::array();
      for (const auto& p : line.points) pts.push_back(Json::array({p.n3, p.n8}));
      polylines.push_back({{"closed", line.closed}, {"points", std::move(pts)}});
    }
    contours.push_back({{"level", level}, {"polylines", std::move(polylines)}});
  }
  j["contours"] = std::move(contours);
  emit(out, j);
  return kOk;
}

int cmd_orbit(const InputSource& src, int count, std::uint64_t seed, double tol, std::istream& in,
              std::ostream& out) {
  if (count < 1) throw UsageError("--count must be at least 1");
  const Vec8 n = read_bloch(src, in);
  const auto samples = orbit_sample(n, count, seed, tol);
  Json j = record("orbit");
  j["seed"] = seed;
  j["count"] = count;
  j["bloch"] = to_json(n);
  Json arr = Json::array();
  for (const auto& s : samples) arr.push_back(to_json(s));
  j["samples"] = std::move(arr);
  emit(out, j);
  return kOk;
}

int cmd_named_points(const std::string& format, std::ostream& out) {
  const auto points = named_points();
  if (format == "csv") {
    out << "label,n3,n8,rho11,rho22,rho33\n";
    for (const auto& p : points) {
      const auto& m = p.rho.matrix();
      out << p.label << ',' << format_double(p.point.n3) << ',' << format_double(p.point.n8) << ','
          << format_double(m(0, 0).real()) << ',' << format_double(m(1, 1).real()) << ','
          << format_double(m(2, 2).real()) << '\n';
    }
    return kOk;
  }
  Json j = record("named-points");
  Json arr = Json::array();
  for (const auto& p : points) {
    Json e;
    e["label"] = p.label;
    e["n3"] = p.point.n3;
    e["n8"] = p.point.n8;
    e["bloch"] = to_json(to_bloch(p.rho));
    e["rho"] = to_json(p.rho.matrix());
    arr.push_back(std::move(e));
  }
  j["points"] = std::move(arr);
  emit(out, j);
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qutrit Bloch-vector toolkit"};
  app.name("qutrit");
  app.require_subcommand(1);

  double tol = kDefaultTol;
  std::string format = "json";
  int resolution = 0;
  std::string levels;
  int count = 1;
  std::uint64_t seed = 0;
  std::string direction;

  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "Slack for state predicates")->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  };

  InputSource check_in;
  auto* check = app.add_subcommand("check", "Test a Bloch vector against the state constraints");
  check_in.attach(check, "Eight Bloch components n1..n8");
  add_tol(check);

  InputSource convert_in;
  auto* convert = app.add_subcommand("convert", "Convert between Bloch vectors and density matrices");
  convert->add_option("direction", direction, "bloch-to-rho or rho-to-bloch")
      ->required()
      ->check(CLI::IsMember({"bloch-to-rho", "rho-to-bloch"}));
  convert_in.attach(convert, "Eight Bloch components, or 18 reals (row-major re,im pairs)");
  add_tol(convert);

  auto* triangle = app.add_subcommand("triangle", "Sample the diagonal-state triangle on a grid");
  triangle->add_option("--resolution", resolution, "Grid points per axis")->default_val(101);
  triangle->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  add_tol(triangle);

  auto* contour = app.add_subcommand("contour", "Equi-entropy curves in the diagonal plane");
  contour->add_option("--levels", levels, "Comma-separated entropy levels in (0,1)");
  contour->add_option("--resolution", resolution, "Grid points per axis")->default_val(200);

  InputSource orbit_in;
  auto* orbit = app.add_subcommand("orbit", "Sample the SU(3) orbit of a Bloch vector");
  orbit_in.attach(orbit, "Eight Bloch components n1..n8");
  orbit->add_option("--count", count, "Number of samples")->capture_default_str();
  orbit->add_option("--seed", seed, "Generator seed")->capture_default_str();
  add_tol(orbit);

  auto* named = app.add_subcommand("named-points", "Vertices, edge midpoints and centre of the triangle");
  named->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(check_in, tol, in, out);
    if (*convert) return cmd_convert(direction, convert_in, tol, in, out);
    if (*triangle) return cmd_triangle(resolution, format, tol, out);
    if (*contour) return cmd_contour(levels, resolution, out);
    if (*orbit) return cmd_orbit(orbit_in, count, seed, tol, in, out);
    if (*named) return cmd_named_points(format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const StateError& e) {
    err << "invalid state: " << e.what() << " [" << e.constraint() << "]\n";
    return kDomain;
  } catch (const ValidationError& e) {
    err << "invalid state: " << e.what() << '\n';
    return kDomain;
  } catch (const ContourError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qutrit::cli
