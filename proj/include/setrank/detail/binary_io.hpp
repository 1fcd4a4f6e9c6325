#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "setrank/error.hpp"

namespace setrank::detail {

// Little-endian fixed-width encoding, independent of host byte order.

inline void write_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  os.write(b, 4);
}

inline void write_u64(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  os.write(b, 8);
}

inline void write_string(std::ostream& os, const std::string& s) {
  write_u32(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw Error("unexpected end of file");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

inline std::uint64_t read_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw Error("unexpected end of file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

inline std::string read_string(std::istream& is) {
  std::uint32_t n = read_u32(is);
  if (n > (1u << 30)) throw Error("corrupt string length in binary file");
  std::string s(n, '\0');
  is.read(s.data(), static_cast<std::streamsize>(n));
  if (!is) throw Error("unexpected end of file");
  return s;
}

inline void expect_magic(std::istream& is, const char (&magic)[5], const char* what) {
  char got[4];
  is.read(got, 4);
  if (!is || !std::equal(got, got + 4, magic)) {
    throw Error(std::string("not a ") + what + " file (bad magic)");
  }
}

}  // namespace setrank::detail
