#include <stdexcept>
#include <string>

#include "cherrylab/random.hpp"
#include "cherrylab/types.hpp"

namespace cherrylab {

std::string_view to_string(CopyMode mode) {
  return mode == CopyMode::proper ? "proper" : "rainbow";
}

std::string_view to_string(Boundedness b) { return b == Boundedness::local ? "local" : "global"; }

CopyMode parse_copy_mode(std::string_view text) {
  if (text == "proper") return CopyMode::proper;
  if (text == "rainbow") return CopyMode::rainbow;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected proper|rainbow)");
}

Boundedness parse_boundedness(std::string_view text) {
  if (text == "local" || text == "proper") return Boundedness::local;
  if (text == "global" || text == "rainbow") return Boundedness::global;
  throw std::invalid_argument("unknown boundedness '" + std::string(text) +
                              "' (expected local|global)");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t phase) {
  return splitmix64(splitmix64(seed) ^ (phase + 0x632be59bd9b4e019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below requires a positive bound");
  // Rejection on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

}  // namespace cherrylab
