#pragma once

#include <filesystem>
#include <iosfwd>

#include "gzk/field.hpp"

namespace gzk {

// Binary layout (little-endian):
//   char[4] "GZKF" | u32 version (=1) | u64 nx | u64 ny | f64 lx | f64 ly |
//   u8 representation (0 physical, 1 spectral) | nx*ny x (f64 re, f64 im), row-major.
// Text layout: first line "GZKF 1 <nx> <ny> <lx> <ly> <physical|spectral>",
// then one "<re> <im>" line per value in row-major order, %.17g.

void write_field_binary(std::ostream& out, const Field& f);
Field read_field_binary(std::istream& in);
void write_field_text(std::ostream& out, const Field& f);
Field read_field_text(std::istream& in);

/// Chooses the format by extension: ".txt" is text, anything else binary.
void save_field(const std::filesystem::path& path, const Field& f);
Field load_field(const std::filesystem::path& path);

}  // namespace gzk
