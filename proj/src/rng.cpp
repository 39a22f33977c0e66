#include "critgraph/rng.hpp"

#include <numeric>
#include <utility>

namespace critgraph {

std::uint64_t CounterRng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection of the biased low range.
  auto x = (*this)();
  auto m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t CounterRng::derive(std::uint64_t seed, std::string_view phase) {
  // FNV-1a over the phase name, then mixed with the seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : phase) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix(mix(seed) ^ h);
}

std::vector<std::uint32_t> random_permutation(std::size_t n, CounterRng& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

}  // namespace critgraph
