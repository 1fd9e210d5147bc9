#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "vpsum/harness.hpp"

namespace vpsum {

/// Parses a sweep description in TOML:
///
///   [[line]]
///   modulus = "holder:0.5"
///   q = [0.3, 0.5]        # scalar or array
///   beta = 0.0            # scalar or array, default 0
///   p = [1, 2, 3]         # scalar or array, default 1
///   m = [64, 128, 256]    # values of n - p + 1
///
/// Array-valued q, beta and p expand into one line per combination, in
/// q-major, then beta, then p order. Throws ParseError.
[[nodiscard]] std::vector<SweepLine> parse_sweep(std::string_view text);

/// Reads and parses a sweep file. Throws ParseError (including for I/O failures).
[[nodiscard]] std::vector<SweepLine> load_sweep(const std::filesystem::path& path);

}  // namespace vpsum
