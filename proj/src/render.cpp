#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace kpoly {

namespace {

constexpr double kScale = 100.0;  // pixels per lattice step
constexpr double kMargin = 4.0;

void append_num(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  out += buf;
}

}  // namespace

std::string svg_for(const KPolyomino& p) {
  const int k = p.k();
  const double inv_scale = 1.0 / (2.0 * std::cos(M_PI / k));
  std::vector<std::vector<std::pair<double, double>>> polys;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& cell : p.cells()) {
    std::vector<std::pair<double, double>> pts;
    for (const CycNum& sv : vertices(k, cell)) {
      ComplexInterval box = sv.to_float(64);
      double x = 0.5 * (box.re_lo + box.re_hi) * inv_scale;
      double y = 0.5 * (box.im_lo + box.im_hi) * inv_scale;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      pts.emplace_back(x, y);
    }
    polys.push_back(std::move(pts));
  }

  double w = (xmax - xmin) * kScale + 2 * kMargin;
  double h = (ymax - ymin) * kScale + 2 * kMargin;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  append_num(out, w);
  out += "\" height=\"";
  append_num(out, h);
  out += "\" viewBox=\"0 0 ";
  append_num(out, w);
  out += " ";
  append_num(out, h);
  out += "\">\n";
  for (const auto& pts : polys) {
    out += "  <polygon points=\"";
    bool first = true;
    for (auto [x, y] : pts) {
      if (!first) out += " ";
      first = false;
      append_num(out, (x - xmin) * kScale + kMargin);
      out += ",";
      append_num(out, (ymax - y) * kScale + kMargin);  // SVG y axis points down
    }
    out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string code_hash(const Code& code) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (int32_t v : code) {
    for (int b = 0; b < 4; ++b) {
      h ^= static_cast<uint64_t>((v >> (8 * b)) & 0xff);
      h *= 0x100000001b3ull;
    }
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<uint32_t>(h ^ (h >> 32)));
  return buf;
}

uint64_t write_svgs(const std::vector<LevelSet>& levels, int n_max,
                    const std::string& out_dir, uint64_t limit) {
  std::filesystem::create_directories(out_dir);
  uint64_t written = 0;
  for (const LevelSet& level : levels) {
    if (level.n > n_max) break;
    for (const auto& [code, rep] : level.classes) {
      if (written >= limit) return written;
      char name[64];
      std::snprintf(name, sizeof name, "%05llu_%s.svg",
                    static_cast<unsigned long long>(written),
                    code_hash(code).c_str());
      std::ofstream f(std::filesystem::path(out_dir) / name,
                      std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot write " + std::string(name));
      f << svg_for(rep);
      ++written;
    }
  }
  return written;
}

}  // namespace kpoly
