#include "formulas.hpp"
#include "render.hpp"
#include "tables.hpp"
#include "verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace kpoly;

TEST_CASE("count records round-trip through JSON") {
  CountRecord r;
  r.k = 6;
  r.n = 5;
  r.count = 22;
  r.method = Method::Orderly;
  r.candidates_glue = 91;
  r.elapsed_ms = 12.5;
  auto j = nlohmann::json::parse(record_json_line(r));
  CHECK(j["k"] == 6);
  CHECK(j["n"] == 5);
  CHECK(j["count"] == "22");
  CHECK(j["method"] == "orderly");
  CHECK(j["candidates"]["glue"] == "91");
  CHECK(j["elapsed_ms"] == 12.5);
}

TEST_CASE("tables are deterministic and ordered") {
  auto rows = run_table(3, 4, 1, 4, Method::Orderly, 1, 10'000'000);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].k == 3);
  CHECK(rows[0].n == 1);
  CHECK(rows[7].k == 4);
  CHECK(rows[7].n == 4);
  CHECK(rows[7].count == 5);

  std::string csv1 = table_csv(rows);
  auto rows2 = run_table(3, 4, 1, 4, Method::Orderly, 2, 10'000'000);
  CHECK(csv1 == table_csv(rows2));
  CHECK(table_json(rows) == table_json(rows2));

  auto parsed = nlohmann::json::parse(table_json(rows));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 8);
  for (size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i]["k"] == rows[i].k);
    CHECK(parsed[i]["n"] == rows[i].n);
    CHECK(parsed[i]["count"] == std::to_string(rows[i].count));
    CHECK(!parsed[i].contains("elapsed_ms"));
  }

  CHECK_THROWS_AS(run_table(3, 2, 1, 4, Method::Orderly, 1, 1000), std::invalid_argument);
  CHECK_THROWS_AS(run_table(3, 3, 1, 5, Method::Formula, 1, 1000), BadNError);
}

TEST_CASE("formula tables match enumerated tables for small n") {
  auto f = run_table(3, 8, 1, 4, Method::Formula, 1, 0);
  auto e = run_table(3, 8, 1, 4, Method::Oracle, 1, 10'000'000);
  REQUIRE(f.size() == e.size());
  for (size_t i = 0; i < f.size(); ++i) CHECK(f[i].count == e[i].count);
}

TEST_CASE("svg output is deterministic and well-formed") {
  auto levels = enumerate_orderly(4, 4);
  const KPolyomino& rep = levels[3].classes.begin()->second;
  std::string svg = svg_for(rep);
  CHECK(svg == svg_for(rep));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("stroke-width=\"2\"") != std::string::npos);
  CHECK(svg.find("fill=\"none\"") != std::string::npos);
  // one polygon per cell
  size_t count = 0;
  for (size_t pos = 0; (pos = svg.find("<polygon", pos)) != std::string::npos; ++pos)
    ++count;
  CHECK(count == 4);
}

TEST_CASE("rendered classes never overlap in float audit") {
  auto levels = enumerate_orderly(4, 4);
  const double inv = 1.0 / (2.0 * std::cos(M_PI / 4));
  for (const auto& [code, rep] : levels[3].classes) {
    // vertex sets per cell in doubles
    std::vector<std::vector<std::pair<double, double>>> polys;
    for (const auto& cell : rep.cells()) {
      std::vector<std::pair<double, double>> pts;
      for (const CycNum& sv : vertices(4, cell)) {
        ComplexInterval box = sv.to_float(64);
        pts.emplace_back(0.5 * (box.re_lo + box.re_hi) * inv,
                         0.5 * (box.im_lo + box.im_hi) * inv);
      }
      polys.push_back(std::move(pts));
    }
    // pairwise interior overlap must stay within tolerance of the exact
    // guarantee: projections on the two axis directions may not overlap by
    // more than 1e-9 on every axis simultaneously
    for (size_t a = 0; a < polys.size(); ++a) {
      for (size_t b = a + 1; b < polys.size(); ++b) {
        double best_gap = -1e9;
        for (auto [ux, uy] : {std::pair<double, double>{1, 0}, {0, 1},
                              {std::sqrt(0.5), std::sqrt(0.5)},
                              {std::sqrt(0.5), -std::sqrt(0.5)}}) {
          double alo = 1e9, ahi = -1e9, blo = 1e9, bhi = -1e9;
          for (auto [x, y] : polys[a]) {
            double t = x * ux + y * uy;
            alo = std::min(alo, t);
            ahi = std::max(ahi, t);
          }
          for (auto [x, y] : polys[b]) {
            double t = x * ux + y * uy;
            blo = std::min(blo, t);
            bhi = std::max(bhi, t);
          }
          best_gap = std::max(best_gap, std::max(blo - ahi, alo - bhi));
        }
        CHECK(best_gap > -1e-9);
      }
    }
  }
}

TEST_CASE("svg files are written deterministically") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "kpoly_render_test";
  fs::remove_all(dir);
  auto levels = enumerate_orderly(4, 3);
  uint64_t written = write_svgs(levels, 3, dir.string(), 100);
  CHECK(written == 4);  // 1 + 1 + 2 classes
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  REQUIRE(names.size() == 4);
  CHECK(names[0].substr(0, 6) == "00000_");

  uint64_t limited = write_svgs(levels, 3, (dir / "limited").string(), 2);
  CHECK(limited == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify passes cleanly and catches tampering") {
  VerifyOptions opt;
  opt.k_max = 6;
  opt.n_max = 4;
  auto rep = run_verify(opt);
  CHECK(rep.ok);
  CHECK(rep.text.find("RESULT PASS") != std::string::npos);

  VerifyOptions bad = opt;
  bad.formula_hook = [](int k, int n, int64_t v) {
    return (k == 5 && n == 4) ? v + 1 : v;
  };
  auto rep2 = run_verify(bad);
  CHECK_FALSE(rep2.ok);
  CHECK(rep2.text.find("k=5 n=4") != std::string::npos);
  CHECK(rep2.text.find("RESULT FAIL") != std::string::npos);
}
