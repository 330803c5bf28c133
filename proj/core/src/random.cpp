#include "svrpll/random.hpp"

namespace svrpll {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose,
                          std::uint64_t index) {
  // FNV-1a over the purpose tag, then mixed with the master seed and index.
  std::uint64_t tag = 0xcbf29ce484222325ULL;
  for (unsigned char c : purpose) {
    tag ^= c;
    tag *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(master ^ tag) + index);
}

}  // namespace svrpll
