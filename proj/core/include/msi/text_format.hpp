#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "msi/cones.hpp"
#include "msi/graded_system.hpp"
#include "msi/monomial_ideal.hpp"
#include "msi/regions.hpp"

namespace msi {

// Line-oriented text formats. `#` starts a comment; blank lines are ignored.
// Malformed input raises Error with code Parse and a line number.

/// `k=<int>`, then `zero` or one generator per line.
MonomialIdeal parse_ideal(std::string_view text);
/// `k=<int>`, then `halfspace a1 .. ak >= c` lines, or `epigraph` with
/// `breakpoint x y slope_right` lines, or the shorthand `kinked N`.
Region parse_region(std::string_view text);
/// `rank <int>`, then `halfspace ..`, `ray ..` or `form ..` lines.
ConeRep parse_cone(std::string_view text);
/// Indented expression tree; file arguments resolve against `base_dir`.
SystemExpr parse_system(std::string_view text, const std::filesystem::path& base_dir);

MonomialIdeal load_ideal(const std::filesystem::path& path);
Region load_region(const std::filesystem::path& path);
ConeRep load_cone(const std::filesystem::path& path);
SystemExpr load_system(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

/// Integer vector in the forms `1,2`, `(1, 2)` or `1 2`.
IndexVector parse_index_vector(std::string_view text);

}  // namespace msi
