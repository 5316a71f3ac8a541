#include "lsc/rng.hpp"

namespace lsc {

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  // FNV-1a over the tag, then one splitmix round mixed with the base.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  Rng mix(base ^ h);
  return mix.next_u64();
}

}  // namespace lsc
