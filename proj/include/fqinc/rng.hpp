#ifndef FQINC_RNG_HPP_
#define FQINC_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace fqinc {

// Portable deterministic randomness. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; range reduction is done here by
// rejection rather than through std::uniform_int_distribution, whose
// algorithm differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // k distinct values of [0, n), ascending (Floyd's algorithm).
  std::vector<std::uint64_t> sample(std::uint64_t n, std::uint64_t k);

 private:
  std::mt19937_64 engine_;
};

// Independent seed for sub-stream `stream` of a run seeded with `seed`
// (SplitMix64 finalizer over both).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace fqinc

#endif  // FQINC_RNG_HPP_
