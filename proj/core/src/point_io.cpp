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

#include "hullfilter/point_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace hullfilter {

namespace {

template <Coordinate T>
using Bits = std::conditional_t<std::same_as<T, float>, std::uint32_t, std::uint64_t>;

template <class U>
void put_le(std::ostream& out, U value) {
  std::array<char, sizeof(U)> bytes;
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  }
  out.write(bytes.data(), bytes.size());
}

template <class U>
U get_le(const unsigned char* bytes) noexcept {
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    value |= static_cast<U>(bytes[i]) << (8 * i);
  }
  return value;
}

void read_exact(std::istream& in, char* dst, std::size_t n, const char* what) {
  in.read(dst, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw FormatError(std::string("point file truncated while reading ") + what);
  }
}

struct Header {
  Precision precision;
  std::uint64_t count;
};

Header read_header(std::istream& in) {
  std::array<char, 13> raw{};
  read_exact(in, raw.data(), raw.size(), "header");
  if (std::memcmp(raw.data(), kPointFileMagic, 4) != 0) {
    throw FormatError("not a point file: bad magic (expected \"PTS2\")");
  }
  const auto tag = static_cast<unsigned char>(raw[4]);
  if (tag > 1) throw FormatError("unknown precision tag " + std::to_string(tag));
  const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
  return {static_cast<Precision>(tag), get_le<std::uint64_t>(bytes + 5)};
}

template <Coordinate T>
PointSet<T> read_body(std::istream& in, std::uint64_t count) {
  constexpr std::size_t kPairBytes = 2 * sizeof(T);
  std::vector<T> xs;
  std::vector<T> ys;
  // Grow incrementally so a corrupt count fails as truncation instead of a
  // giant allocation.
  constexpr std::uint64_t kBatch = 1 << 16;
  std::vector<unsigned char> buf;
  for (std::uint64_t done = 0; done < count;) {
    const std::uint64_t batch = std::min(kBatch, count - done);
    buf.resize(batch * kPairBytes);
    read_exact(in, reinterpret_cast<char*>(buf.data()), buf.size(), "coordinates");
    for (std::uint64_t k = 0; k < batch; ++k) {
      const unsigned char* pair = buf.data() + k * kPairBytes;
      xs.push_back(std::bit_cast<T>(get_le<Bits<T>>(pair)));
      ys.push_back(std::bit_cast<T>(get_le<Bits<T>>(pair + sizeof(T))));
    }
    done += batch;
  }
  try {
    return PointSet<T>(std::move(xs), std::move(ys));
  } catch (const NonFiniteCoordinate& e) {
    throw FormatError(std::string("point file holds a non-finite coordinate: ") + e.what());
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

bool is_csv(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return ext == ".csv";
}

template <Coordinate T>
void append_number(std::string& line, T v) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  line.append(buf.data(), res.ptr);
}

template <Coordinate T>
T parse_number(std::string_view text, std::size_t line_no) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw FormatError("CSV line " + std::to_string(line_no) + ": cannot parse '" +
                      std::string(text) + "'");
  }
  return value;
}

}  // namespace

template <Coordinate T>
void write_points(std::ostream& out, const PointSet<T>& s) {
  out.write(kPointFileMagic, 4);
  out.put(static_cast<char>(precision_of<T>));
  put_le<std::uint64_t>(out, s.size());
  const auto xs = s.xs();
  const auto ys = s.ys();
  for (std::size_t i = 0; i < s.size(); ++i) {
    put_le(out, std::bit_cast<Bits<T>>(xs[i]));
    put_le(out, std::bit_cast<Bits<T>>(ys[i]));
  }
  if (!out) throw std::runtime_error("write_points: stream error");
}

template <Coordinate T>
void write_points(const std::filesystem::path& path, const PointSet<T>& s) {
  auto out = open_out(path);
  write_points(out, s);
}

template <Coordinate T>
PointSet<T> read_points(std::istream& in) {
  const Header h = read_header(in);
  if (h.precision != precision_of<T>) {
    throw PrecisionMismatch("point file stores " + std::string(to_string(h.precision)) +
                            ", requested " + std::string(to_string(precision_of<T>)));
  }
  return read_body<T>(in, h.count);
}

template <Coordinate T>
PointSet<T> read_points(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_points<T>(in);
}

AnyPointSet read_points_any(std::istream& in) {
  const Header h = read_header(in);
  if (h.precision == Precision::F32) return read_body<float>(in, h.count);
  return read_body<double>(in, h.count);
}

AnyPointSet read_points_any(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_points_any(in);
}

template <Coordinate T>
void write_points_csv(std::ostream& out, const PointSet<T>& s) {
  out << "x,y\n";
  std::string line;
  for (std::size_t i = 0; i < s.size(); ++i) {
    line.clear();
    append_number(line, s.xs()[i]);
    line.push_back(',');
    append_number(line, s.ys()[i]);
    line.push_back('\n');
    out << line;
  }
  if (!out) throw std::runtime_error("write_points_csv: stream error");
}

template <Coordinate T>
PointSet<T> read_points_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("CSV is empty (expected header 'x,y')");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y") throw FormatError("CSV header must be 'x,y', got '" + line + "'");
  std::vector<T> xs;
  std::vector<T> ys;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw FormatError("CSV line " + std::to_string(line_no) + ": expected 'x,y'");
    }
    const std::string_view view(line);
    xs.push_back(parse_number<T>(view.substr(0, comma), line_no));
    ys.push_back(parse_number<T>(view.substr(comma + 1), line_no));
  }
  try {
    return PointSet<T>(std::move(xs), std::move(ys));
  } catch (const NonFiniteCoordinate& e) {
    throw FormatError(std::string("CSV holds a non-finite coordinate: ") + e.what());
  }
}

template <Coordinate T>
void save_points(const std::filesystem::path& path, const PointSet<T>& s) {
  auto out = open_out(path);
  if (is_csv(path)) {
    write_points_csv(out, s);
  } else {
    write_points(out, s);
  }
}

AnyPointSet load_points(const std::filesystem::path& path, Precision csv_precision) {
  auto in = open_in(path);
  if (is_csv(path)) {
    if (csv_precision == Precision::F32) return read_points_csv<float>(in);
    return read_points_csv<double>(in);
  }
  return read_points_any(in);
}

#define HULLFILTER_INSTANTIATE(T)                                                     \
  template void write_points(std::ostream&, const PointSet<T>&);                      \
  template void write_points(const std::filesystem::path&, const PointSet<T>&);       \
  template PointSet<T> read_points<T>(std::istream&);                                 \
  template PointSet<T> read_points<T>(const std::filesystem::path&);                  \
  template void write_points_csv(std::ostream&, const PointSet<T>&);                  \
  template PointSet<T> read_points_csv<T>(std::istream&);                             \
  template void save_points(const std::filesystem::path&, const PointSet<T>&);

HULLFILTER_INSTANTIATE(float)
HULLFILTER_INSTANTIATE(double)

#undef HULLFILTER_INSTANTIATE

}  // namespace hullfilter
