#ifndef SVRPLL_RANDOM_HPP_
#define SVRPLL_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace svrpll {

// SplitMix64 finalizer. Used to derive independent seeds for named streams.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for the stream `purpose` under a master seed. Streams with different
// purposes are statistically independent, so adding draws to one stream
// never perturbs another (e.g. candidate sites vs. target positions).
std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose,
                          std::uint64_t index = 0);

// All instance randomness goes through std::mt19937_64, whose output sequence
// is fixed by the C++ standard.  Real draws use the top 53 bits so the values
// are identical on every platform (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace svrpll

#endif  // SVRPLL_RANDOM_HPP_
