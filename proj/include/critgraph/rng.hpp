#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace critgraph {

/// Counter-based generator: output i is splitmix64(key + i * golden).
///
/// A stream is identified by its key alone, so independent phases of a
/// computation (per bundle, per base graph, per worker job) draw from
/// disjoint keys derived with `derive`. Output does not depend on how the
/// phases are scheduled. Satisfies UniformRandomBitGenerator, but callers
/// should prefer `below` / `unit` over <random> distributions, whose
/// algorithms differ between standard libraries.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  /// Stream for a named phase of the computation keyed by `seed`.
  static CounterRng for_phase(std::uint64_t seed, std::string_view phase) { return CounterRng(derive(seed, phase)); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + (++counter_) * kGolden); }

  /// Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t key() const { return key_; }
  std::uint64_t draws() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t derive(std::uint64_t seed, std::string_view phase);
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) { return mix(mix(seed) ^ mix(index + kGolden)); }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Fisher-Yates permutation of 0..n-1.
std::vector<std::uint32_t> random_permutation(std::size_t n, CounterRng& rng);

}  // namespace critgraph
