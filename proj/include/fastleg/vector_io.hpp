#pragma once

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace fastleg {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VectorFormat { csv, raw_binary };

// Binary layout: 8-byte magic, uint64 little-endian count, count IEEE-754
// binary64 little-endian values.
inline constexpr std::array<char, 8> vector_magic = {'F', 'L', 'E', 'G', 'V', 'E', 'C', '1'};

namespace detail {

inline void put_u64_le(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> buf;
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(buf.data(), 8);
}

inline std::uint64_t get_u64_le(std::istream& is) {
  std::array<char, 8> buf;
  is.read(buf.data(), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
  return v;
}

inline std::string format_shortest(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace detail

inline void write_vector(const std::filesystem::path& path, const std::vector<double>& values,
                         VectorFormat format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path.string());
  if (format == VectorFormat::csv) {
    for (double v : values) os << detail::format_shortest(v) << '\n';
  } else {
    os.write(vector_magic.data(), vector_magic.size());
    detail::put_u64_le(os, values.size());
    for (double v : values) detail::put_u64_le(os, std::bit_cast<std::uint64_t>(v));
  }
  if (!os) throw IoError("write failed: " + path.string());
}

inline std::vector<double> read_vector(const std::filesystem::path& path, VectorFormat format) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for reading: " + path.string());
  std::vector<double> values;
  if (format == VectorFormat::csv) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      // tolerate surrounding whitespace and a trailing blank line
      const auto begin = line.find_first_not_of(" \t\r");
      if (begin == std::string::npos) continue;
      const auto end = line.find_last_not_of(" \t\r") + 1;
      double v = 0.0;
      const auto res = std::from_chars(line.data() + begin, line.data() + end, v);
      if (res.ec != std::errc{} || res.ptr != line.data() + end)
        throw IoError(path.string() + ":" + std::to_string(lineno) + ": not a number: '" +
                      line.substr(begin, end - begin) + "'");
      values.push_back(v);
    }
  } else {
    std::array<char, 8> magic;
    is.read(magic.data(), magic.size());
    if (!is || !std::equal(magic.begin(), magic.end(), vector_magic.begin()))
      throw IoError(path.string() + ": bad magic, not a vector file");
    const std::uint64_t count = detail::get_u64_le(is);
    if (!is) throw IoError(path.string() + ": truncated header");
    values.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t bits = detail::get_u64_le(is);
      if (!is) throw IoError(path.string() + ": truncated payload");
      values[i] = std::bit_cast<double>(bits);
    }
  }
  return values;
}

}  // namespace fastleg
