#pragma once

#include <cstdint>
#include <string>

namespace gapkit {

// FNV-1a 64-bit over canonical instance bytes; the digest that appears in
// verification reports.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(const std::string& bytes);

}  // namespace gapkit
