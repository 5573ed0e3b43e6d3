#pragma once

// Text format for point sets:
//
//   fq p=<p> ell=<ell> d=<d> mod=<c0,c1,...,cl>
//   x_1,x_2,...,x_d
//   ...
//
// Coordinates are packed element indices. Lines starting with '#' and blank
// lines are ignored. The modulus must be the one FieldCtx::make selects.

#include <filesystem>
#include <string>
#include <string_view>

#include "fqdist/geometry.hpp"

namespace fqdist {

std::string format_point_set(const PointSet& a);

// Throws ParseError (message carries the line number).
PointSet parse_point_set(std::string_view text);

// Throws IoError, ParseError.
PointSet read_point_set_file(const std::filesystem::path& path);
void write_point_set_file(const PointSet& a, const std::filesystem::path& path);

}  // namespace fqdist
