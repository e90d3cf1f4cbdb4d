#include "gapkit/digest.hpp"

#include <array>

namespace gapkit {

std::string digest_hex(const std::string& bytes) {
  static const char* hexdig = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexdig[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace gapkit
