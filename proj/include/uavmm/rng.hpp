// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace uavmm {

using RngStream = std::mt19937_64;

/// splitmix64 finalizer; full-avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child-stream seed derived from (master seed, purpose tag, index).
/// Streams with distinct tags or indices are independent, so adding a new
/// consumer (a new tag) never perturbs the draws of existing ones.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag bytes
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(master) ^ mix64(h) ^ mix64(index + 0x1fULL));
}

inline RngStream make_stream(std::uint64_t master, std::string_view tag,
                             std::uint64_t index) {
  return RngStream(derive_seed(master, tag, index));
}

}  // namespace uavmm
