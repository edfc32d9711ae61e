// kpoly command line front end. Talks to the shared library exclusively
// through the C interface in kpoly/kpoly.h.

#include <kpoly/kpoly.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int status_exit(kpoly_status s) {
  switch (s) {
    case KPOLY_OK: return kExitOk;
    case KPOLY_EBUDGET: return kExitBudget;
    case KPOLY_EVERIFY: return kExitMismatch;
    default: return kExitUsage;
  }
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { kpoly_string_free(s); }
};

bool parse_range(const std::string& text, int& lo, int& hi) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, pos));
      hi = std::stoi(text.substr(pos + 2));
    }
  } catch (...) {
    return false;
  }
  return lo <= hi;
}

std::optional<kpoly_method> parse_method(const std::string& m) {
  if (m == "formula") return KPOLY_METHOD_FORMULA;
  if (m == "oracle") return KPOLY_METHOD_ORACLE;
  if (m == "orderly") return KPOLY_METHOD_ORDERLY;
  return std::nullopt;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

int fail(kpoly_status s, const char* what) {
  std::cerr << "error: " << what << ": " << kpoly_status_message(s) << "\n";
  return status_exit(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of k-polyominoes (edge-to-edge unions of regular k-gons)"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "count classes for one (k, n)");
  int c_k = 0, c_n = 0, c_workers = 1;
  std::string c_method = "orderly";
  uint64_t c_budget = 0;
  count->add_option("--k", c_k, "number of sides of a cell")->required();
  count->add_option("--n", c_n, "number of cells")->required();
  count->add_option("--method", c_method, "formula|oracle|orderly");
  count->add_option("--workers", c_workers, "worker threads");
  count->add_option("--budget", c_budget, "candidate cap per level (0 = default)");

  // table
  auto* table = app.add_subcommand("table", "count table over k and n ranges");
  std::string t_krange, t_nrange, t_method = "orderly", t_format = "csv", t_out;
  int t_workers = 1;
  uint64_t t_budget = 0;
  table->add_option("--k-range", t_krange, "A..B inclusive")->required();
  table->add_option("--n-range", t_nrange, "A..B inclusive")->required();
  table->add_option("--method", t_method, "formula|oracle|orderly");
  table->add_option("--format", t_format, "csv|json");
  table->add_option("--out", t_out, "output file (stdout when omitted)");
  table->add_option("--workers", t_workers, "worker threads");
  table->add_option("--budget", t_budget, "candidate cap per level (0 = default)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the cross-validation suites");
  int v_kmax = 12, v_nmax = 6, v_workers = 1;
  uint64_t v_budget = 0;
  verify->add_option("--k-max", v_kmax, "largest k");
  verify->add_option("--n-max", v_nmax, "largest n");
  verify->add_option("--workers", v_workers, "worker threads");
  verify->add_option("--budget", v_budget, "candidate cap per level (0 = default)");

  // render
  auto* render = app.add_subcommand("render", "write one SVG per class");
  int r_k = 0, r_n = 0, r_workers = 1;
  uint64_t r_limit = 100, r_budget = 0;
  std::string r_out;
  render->add_option("--k", r_k, "number of sides of a cell")->required();
  render->add_option("--n", r_n, "render classes of sizes 1..n")->required();
  render->add_option("--out", r_out, "output directory")->required();
  render->add_option("--limit", r_limit, "maximum number of files");
  render->add_option("--workers", r_workers, "worker threads");
  render->add_option("--budget", r_budget, "candidate cap per level (0 = default)");

  // stats
  auto* stats = app.add_subcommand("stats", "edge-count extremes vs the bounds");
  int s_k = 0, s_workers = 1;
  std::string s_nrange = "1..8", s_format = "csv", s_out;
  uint64_t s_budget = 0;
  stats->add_option("--k", s_k, "number of sides of a cell")->required();
  stats->add_option("--n-range", s_nrange, "A..B inclusive");
  stats->add_option("--format", s_format, "csv|json");
  stats->add_option("--out", s_out, "output file (stdout when omitted)");
  stats->add_option("--workers", s_workers, "worker threads");
  stats->add_option("--budget", s_budget, "candidate cap per level (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (count->parsed()) {
    auto method = parse_method(c_method);
    if (!method || c_k < 3 || c_n < 1) {
      std::cerr << "error: bad arguments\n";
      return kExitUsage;
    }
    StringOut line;
    kpoly_status s = kpoly_count_run(c_k, c_n, *method, c_workers, c_budget, &line.s);
    if (s != KPOLY_OK) return fail(s, "count");
    std::cout << line.s << "\n";
    return kExitOk;
  }

  if (table->parsed()) {
    auto method = parse_method(t_method);
    int klo = 0, khi = 0, nlo = 0, nhi = 0;
    if (!method || !parse_range(t_krange, klo, khi) ||
        !parse_range(t_nrange, nlo, nhi) || (t_format != "csv" && t_format != "json")) {
      std::cerr << "error: bad arguments\n";
      return kExitUsage;
    }
    StringOut text;
    kpoly_status s = kpoly_table(klo, khi, nlo, nhi, *method, t_workers, t_budget,
                                 t_format == "csv" ? KPOLY_FORMAT_CSV : KPOLY_FORMAT_JSON,
                                 &text.s);
    if (s != KPOLY_OK) return fail(s, "table");
    return emit(text.s, t_out);
  }

  if (verify->parsed()) {
    StringOut report;
    int ok = 0;
    kpoly_status s = kpoly_verify(v_kmax, v_nmax, v_workers, v_budget, &report.s, &ok);
    if (s != KPOLY_OK) return fail(s, "verify");
    std::cout << report.s;
    return ok ? kExitOk : kExitMismatch;
  }

  if (render->parsed()) {
    if (r_k < 3 || r_n < 1) {
      std::cerr << "error: bad arguments\n";
      return kExitUsage;
    }
    kpoly_levels* levels = nullptr;
    kpoly_status s = kpoly_enumerate(r_k, r_n, KPOLY_METHOD_ORDERLY, r_workers,
                                     r_budget, &levels);
    if (s != KPOLY_OK) return fail(s, "render");
    uint64_t written = 0;
    s = kpoly_levels_render_svg(levels, r_n, r_out.c_str(), r_limit, &written);
    kpoly_levels_free(levels);
    if (s != KPOLY_OK) return fail(s, "render");
    std::cout << "wrote " << written << " files to " << r_out << "\n";
    return kExitOk;
  }

  if (stats->parsed()) {
    int nlo = 0, nhi = 0;
    if (s_k < 3 || !parse_range(s_nrange, nlo, nhi) ||
        (s_format != "csv" && s_format != "json")) {
      std::cerr << "error: bad arguments\n";
      return kExitUsage;
    }
    StringOut text;
    kpoly_status s = kpoly_edge_stats(s_k, nlo, nhi, s_workers, s_budget,
                                      s_format == "csv" ? KPOLY_FORMAT_CSV : KPOLY_FORMAT_JSON,
                                      &text.s);
    if (s != KPOLY_OK) return fail(s, "stats");
    return emit(text.s, s_out);
  }

  return kExitUsage;
}
