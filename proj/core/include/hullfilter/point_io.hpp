// Copyright 2026 The hullfilter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "hullfilter/geometry.hpp"

namespace hullfilter {

// Binary point file ("PTS2"):
//   bytes 0..3   magic "PTS2"
//   byte  4      precision tag, 0 = F32, 1 = F64
//   bytes 5..12  point count, unsigned 64-bit little-endian
//   then count interleaved (x, y) pairs, IEEE-754 little-endian
// CSV files carry a header line "x,y" followed by one point per line.

using AnyPointSet = std::variant<PointSet<float>, PointSet<double>>;

inline constexpr char kPointFileMagic[4] = {'P', 'T', 'S', '2'};

template <Coordinate T>
void write_points(std::ostream& out, const PointSet<T>& s);
template <Coordinate T>
void write_points(const std::filesystem::path& path, const PointSet<T>& s);

/// Throws FormatError on bad magic, unknown tag or truncation and
/// PrecisionMismatch when the stored precision is not T.
template <Coordinate T>
PointSet<T> read_points(std::istream& in);
template <Coordinate T>
PointSet<T> read_points(const std::filesystem::path& path);

/// Reads whichever precision the file stores.
AnyPointSet read_points_any(std::istream& in);
AnyPointSet read_points_any(const std::filesystem::path& path);

/// Shortest round-trip decimal text, so CSV export is lossless too.
template <Coordinate T>
void write_points_csv(std::ostream& out, const PointSet<T>& s);
/// Throws FormatError on a missing header or unparsable line.
template <Coordinate T>
PointSet<T> read_points_csv(std::istream& in);

/// Picks CSV for a ".csv" extension and the binary format otherwise.
template <Coordinate T>
void save_points(const std::filesystem::path& path, const PointSet<T>& s);
/// CSV files are read at the requested precision; binary files at theirs.
AnyPointSet load_points(const std::filesystem::path& path, Precision csv_precision);

}  // namespace hullfilter
