#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pathmine {

// FNV-1a, 64-bit. Checksums for change detection, not security.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string digest_hex(std::string_view bytes);

}  // namespace pathmine
