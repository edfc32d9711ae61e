#pragma once

#include "enumerate.hpp"

#include <string>

namespace kpoly {

/// Deterministic SVG of one polyomino: each cell drawn as a k-gon, 100 px per
/// lattice step, stroke width 2, no fill.
std::string svg_for(const KPolyomino& p);

/// Short deterministic hash of a code, used in render file names.
std::string code_hash(const Code& code);

/// Writes one SVG per class for sizes 1..n_max (levels must cover them), at
/// most limit files in total. File names are a running index plus the code
/// hash. Returns the number of files written.
uint64_t write_svgs(const std::vector<LevelSet>& levels, int n_max,
                    const std::string& out_dir, uint64_t limit);

}  // namespace kpoly
