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

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "json_out.hpp"
#include "qutrit/bloch.hpp"
#include "qutrit/density.hpp"
#include "qutrit/triangle.hpp"

namespace qutrit {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kRed3 = cli::format_double(std::sqrt(3.0) / 2.0);

TEST(CliFormat, SeventeenSignificantDigits) {
  EXPECT_EQ(cli::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(cli::format_double(1.0), "1");
  std::ostringstream os;
  cli::write_json(os, nlohmann::ordered_json{{"x", 1.0 / 3.0}, {"n", 3}, {"s", "a\"b"}});
  EXPECT_EQ(os.str(), R"({"x":0.33333333333333331,"n":3,"s":"a\"b"})");
}

TEST(CliCheck, MaximallyMixed) {
  const auto r = run({"check", "0", "0", "0", "0", "0", "0", "0", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = r.doc();
  EXPECT_EQ(d["schema_version"], "1");
  EXPECT_TRUE(d["valid"].get<bool>());
  EXPECT_FALSE(d["pure"].get<bool>());
  EXPECT_NEAR(d["entropy"].get<double>(), 1.0, 1e-12);
  for (const auto& e : d["eigenvalues"]) EXPECT_NEAR(e.get<double>(), 1.0 / 3.0, 1e-15);
}

TEST(CliCheck, VertexRIsPure) {
  const auto r = run({"check", "0", "0", kRed3, "0", "0", "0", "0", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = r.doc();
  EXPECT_TRUE(d["pure"].get<bool>());
  EXPECT_NEAR(d["entropy"].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(d["constraints"]["norm_sq"].get<double>(), 1.0, 1e-15);
}

TEST(CliCheck, InvalidAndMalformed) {
  const auto bad = run({"check", "0", "0", "0", "0", "0", "0", "0", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.doc()["valid"].get<bool>());
  EXPECT_TRUE(bad.doc()["entropy"].is_null());
  EXPECT_EQ(run({"check", "0", "0", "zero", "0", "0", "0", "0", "0"}).code, 1);
  EXPECT_EQ(run({"check", "0", "0", "0"}).code, 1);
  EXPECT_EQ(run({"check", "0", "0", "0", "0", "0", "0", "0", "nan"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(CliCheck, StdinJsonAndToleranceFlag) {
  const auto r = run({"check", "--stdin"}, R"({"bloch":[0,0,0,0,0,0,0,0.5]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.doc()["entropy"].get<double>(), std::log(2.0) / std::log(3.0), 1e-12);
  // Slightly outside; accepted only with a generous tolerance.
  const std::vector<std::string> outside{"check", "0", "0", "0", "0", "0", "0", "0", "0.500001"};
  EXPECT_EQ(run(outside).code, 2);
  auto loose = outside;
  loose.insert(loose.end(), {"--tol", "1e-4"});
  EXPECT_EQ(run(loose).code, 0);
  EXPECT_EQ(run({"check", "--stdin"}, "{not json").code, 1);
  EXPECT_EQ(run({"check", "--input", "/nonexistent/file.json"}).code, 1);
}

TEST(CliConvert, BlochToRhoMatchesLibraryBitForBit) {
  const auto r = run({"convert", "bloch-to-rho", "0.1", "-0.2", "0.05", "0", "0.3", "0", "-0.1", "0.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Matrix3c want = from_bloch(Vec8{0.1, -0.2, 0.05, 0, 0.3, 0, -0.1, 0.2}).matrix();
  const auto rho = r.doc()["rho"];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(rho[i][j][0].get<double>(), want(i, j).real());
      EXPECT_EQ(rho[i][j][1].get<double>(), want(i, j).imag());
    }
}

TEST(CliConvert, Examples) {
  const auto origin = run({"convert", "bloch-to-rho", "0", "0", "0", "0", "0", "0", "0", "0"});
  ASSERT_EQ(origin.code, 0);
  const auto rho = origin.doc()["rho"];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(rho[i][j][0].get<double>(), i == j ? 1.0 / 3 : 0.0, 1e-16);

  const auto red = run({"convert", "rho-to-bloch", "--stdin"},
                       "[[[1,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]]]");
  ASSERT_EQ(red.code, 0) << red.err;
  const auto n = red.doc()["bloch"];
  EXPECT_NEAR(n[2].get<double>(), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(n[7].get<double>(), 0.5, 1e-15);

  // 18 positional reals: diag(0, 0, 1) -> G.
  const auto green = run({"convert", "rho-to-bloch", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0",
                          "0", "0", "0", "0", "0", "0", "1", "0"});
  ASSERT_EQ(green.code, 0) << green.err;
  EXPECT_NEAR(green.doc()["bloch"][7].get<double>(), -1.0, 1e-15);
}

TEST(CliConvert, RoundTripThroughJson) {
  const auto fwd = run({"convert", "bloch-to-rho", "0.2", "0.1", "-0.3", "0.05", "0", "0.1", "0.2", "-0.1"});
  ASSERT_EQ(fwd.code, 0);
  const auto back = run({"convert", "rho-to-bloch", "--stdin"}, fwd.out);
  ASSERT_EQ(back.code, 0) << back.err;
  const std::vector<double> want{0.2, 0.1, -0.3, 0.05, 0, 0.1, 0.2, -0.1};
  const auto got = back.doc()["bloch"];
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(got[k].get<double>(), want[k], 1e-12);
}

TEST(CliConvert, InvalidStatesExitTwo) {
  const auto r = run({"convert", "bloch-to-rho", "0", "0", "0", "0", "0", "0", "0", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("norm_sq"), std::string::npos);
  const auto neg = run({"convert", "rho-to-bloch", "--stdin"},
                       "[[[1.5,0],[0,0],[0,0]],[[0,0],[-0.5,0],[0,0]],[[0,0],[0,0],[0,0]]]");
  EXPECT_EQ(neg.code, 2);
  EXPECT_NE(neg.err.find("positiv"), std::string::npos);
  const auto trace = run({"convert", "rho-to-bloch", "--stdin"},
                         "[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[0,0]]]");
  EXPECT_EQ(trace.code, 2);
  EXPECT_EQ(run({"convert", "sideways", "0"}).code, 1);
  EXPECT_EQ(run({"convert", "rho-to-bloch", "--stdin"}, "[[1,2],[3]]").code, 1);
}

TEST(CliTriangle, ResolutionThreeCsv) {
  const auto r = run({"triangle", "--resolution", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n3,n8,q1,q2,in_region,entropy");
  int rows = 0, inside = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find(",true,") != std::string::npos) {
      ++inside;
      EXPECT_NE(line.back(), ',');
    } else {
      EXPECT_EQ(line.back(), ',');
    }
  }
  EXPECT_EQ(rows, 9);
  EXPECT_EQ(inside, 5);  // B, M_RB, R, (0,-1/4), G
}

TEST(CliTriangle, CsvAndJsonCarryIdenticalNumbers) {
  const auto csv = run({"triangle", "--resolution", "25", "--format", "csv"});
  const auto js = run({"triangle", "--resolution", "25", "--format", "json"});
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(js.code, 0);
  const auto doc = js.doc();
  EXPECT_EQ(doc["schema_version"], "1");
  const auto& rows = doc["rows"];
  ASSERT_EQ(rows.size(), 625u);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  for (const auto& row : rows) {
    ASSERT_TRUE(std::getline(lines, line));
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    ASSERT_EQ(cells.size(), 6u);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(std::stod(cells[static_cast<std::size_t>(k)]), row[k].get<double>());
    EXPECT_EQ(cells[4] == "true", row[4].get<bool>());
    if (row[5].is_null()) {
      EXPECT_TRUE(cells[5].empty());
    } else {
      EXPECT_EQ(std::stod(cells[5]), row[5].get<double>());
    }
  }
}

TEST(CliTriangle, BadResolution) {
  EXPECT_EQ(run({"triangle", "--resolution", "1"}).code, 1);
  EXPECT_EQ(run({"triangle", "--resolution", "ten"}).code, 1);
  EXPECT_EQ(run({"triangle", "--format", "xml"}).code, 1);
}

TEST(CliContour, LevelsAndErrors) {
  const auto r = run({"contour", "--levels", "0.9,0.5", "--resolution", "80"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto d = r.doc();
  ASSERT_EQ(d["contours"].size(), 2u);
  const auto& high = d["contours"][0];
  EXPECT_EQ(high["level"].get<double>(), 0.9);
  ASSERT_GE(high["polylines"].size(), 1u);
  EXPECT_TRUE(high["polylines"][0]["closed"].get<bool>());
  for (const auto& c : d["contours"]) {
    const double level = c["level"].get<double>();
    for (const auto& pl : c["polylines"])
      for (const auto& p : pl["points"]) {
        const DiagPoint q{p[0].get<double>(), p[1].get<double>()};
        EXPECT_LE(std::abs(diagonal_entropy(q) - level), 2.0 / 80);
      }
  }

  const auto empty = run({"contour"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(empty.doc()["contours"].empty());

  const auto bad = run({"contour", "--levels", "0.5,1.5"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("1.5"), std::string::npos);
  EXPECT_EQ(run({"contour", "--levels", "0.5,abc"}).code, 1);
}

TEST(CliOrbit, Examples) {
  const auto zero = run({"orbit", "0", "0", "0", "0", "0", "0", "0", "0", "--count", "4", "--seed", "9"});
  ASSERT_EQ(zero.code, 0) << zero.err;
  ASSERT_EQ(zero.doc()["samples"].size(), 4u);
  for (const auto& s : zero.doc()["samples"])
    for (const auto& x : s) EXPECT_EQ(x.get<double>(), 0.0);

  const std::vector<std::string> args{"orbit", "0", "0", kRed3, "0", "0", "0", "0", "0.5",
                                      "--count", "10", "--seed", "2024"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto samples = a.doc()["samples"];
  ASSERT_EQ(samples.size(), 10u);
  for (const auto& s : samples) {
    Vec8::Storage c{};
    for (std::size_t k = 0; k < 8; ++k) c[k] = s[k].get<double>();
    EXPECT_TRUE(is_pure(Vec8(c)));
  }

  EXPECT_EQ(run({"orbit", "0", "0", "0", "0", "0", "0", "0", "2"}).code, 2);
  EXPECT_EQ(run({"orbit", "0", "0", "0", "0", "0", "0", "0", "0", "--count", "0"}).code, 1);
}

TEST(CliNamedPoints, Table) {
  const auto r = run({"named-points"});
  ASSERT_EQ(r.code, 0);
  const auto pts = r.doc()["points"];
  ASSERT_EQ(pts.size(), 7u);
  bool found = false;
  for (const auto& p : pts) {
    if (p["label"] == "M_BG") {
      found = true;
      EXPECT_NEAR(p["n3"].get<double>(), -std::sqrt(3.0) / 4, 1e-15);
      EXPECT_NEAR(p["n8"].get<double>(), -0.25, 1e-15);
    }
  }
  EXPECT_TRUE(found);
  const auto csv = run({"named-points", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "label,n3,n8,rho11,rho22,rho33");
}

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(QUTRIT_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

TEST(CliBinary, OrbitIsByteIdenticalAcrossProcesses) {
  const std::string args = "orbit 0.1 0 0.2 0 0 0.1 0 -0.3 --count 25 --seed 31337";
  const std::string a = run_binary(args);
  const std::string b = run_binary(args);
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace qutrit
