#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace cherrylab {

// Mixes a seed with a phase index (splitmix64 over the pair). Every random
// phase of a run draws from derive_seed(run_seed, phase) so phases stay
// independent and reproducible.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t phase);

// Seeded generator with portable bounded draws. std::mt19937_64 output is fixed
// by the standard; the std distributions are not, so they are avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cherrylab
