#include <doctest.h>

#include "critgraph/alpha.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/rng.hpp"
#include "oracle.hpp"

using namespace critgraph;

namespace {

std::vector<std::size_t> counts_of(const AlphaVector& a, std::size_t n) {
  std::vector<std::size_t> out(n + 1, 0);
  for (const auto& [size, cnt] : a.entries()) out[size] = cnt;
  return out;
}

}  // namespace

TEST_CASE("lexmin_alpha examples") {
  auto a = lexmin_alpha(7, 4);
  CHECK(a.count(3) == 1);
  CHECK(a.count(2) == 2);
  CHECK(a.entries().size() == 2);
  CHECK(alpha_edge_lower_bound(a) == 5);

  for (std::size_t n = 2; n <= 12; ++n) {
    auto one = lexmin_alpha(n, n - 1);
    CHECK(one.count(n) == 1);
    CHECK(one.cliques() == 1);
    CHECK(alpha_edge_lower_bound(one) == n * (n - 1) / 2);
  }
  auto b = lexmin_alpha(6, 3);
  CHECK(b.count(2) == 3);
  CHECK(alpha_edge_lower_bound(b) == 3);
  CHECK(lexmin_alpha(0, 0).empty());
  CHECK(lexmin_alpha(5, 0).count(1) == 5);
  CHECK_THROWS_AS(lexmin_alpha(4, 4), InvalidArgument);
}

TEST_CASE("max_edges") {
  CHECK(max_edges(10, 6) == 39);
  CHECK(max_edges(3, 1) == 2);
  for (std::size_t n = 2; n <= 20; ++n) CHECK(max_edges(n, n - 1) == n * (n - 1) / 2);
  CHECK_THROWS_AS(max_edges(3, 3), InvalidArgument);
}

TEST_CASE("lexmin_alpha matches exhaustive partitions") {
  for (std::size_t n = 1; n <= 40; ++n)
    for (std::size_t c = 0; c < n; ++c) {
      CAPTURE(n);
      CAPTURE(c);
      const auto a = lexmin_alpha(n, c);
      CHECK(counts_of(a, n) == oracle::lexmin_counts(n, c));
      CHECK(a.n() == n);
      CHECK(a.c() == c);
      CHECK(a.cliques() == n - c);
      CHECK(alpha_edge_lower_bound(a) <= max_edges(n, c));
    }
}

TEST_CASE("incremental updates equal recomputation") {
  CHECK(alpha_after_parallel(lexmin_alpha(7, 4)) == lexmin_alpha(6, 3));
  CHECK(alpha_after_chain(lexmin_alpha(7, 4)) == lexmin_alpha(5, 3));
  auto c97 = alpha_after_chain(lexmin_alpha(9, 7));
  CHECK(c97.count(7) == 1);
  CHECK(c97 == lexmin_alpha(7, 6));
  CHECK(alpha_after_chain(lexmin_alpha(2, 1)).empty());

  // every feasible single step from every small state
  for (std::size_t n = 1; n <= 80; ++n)
    for (std::size_t c = 0; c < n; ++c) {
      const auto a = lexmin_alpha(n, c);
      CHECK(parallel_fits(a) == (c >= 1));
      if (parallel_fits(a)) CHECK(alpha_after_parallel(a) == lexmin_alpha(n - 1, c - 1));
      if (chain_fits(a)) CHECK(alpha_after_chain(a) == lexmin_alpha(n - 2, c - 1));
      else CHECK_THROWS_AS(alpha_after_chain(a), InfeasibleError);
    }

  auto rng = CounterRng::for_phase(79, "alpha-chains");
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + rng.below(300);
    std::size_t c = rng.below(n);
    auto a = lexmin_alpha(n, c);
    while (true) {
      const bool p = parallel_fits(a), ch = chain_fits(a);
      if (!p && !ch) break;
      if (ch && (!p || rng.below(2))) {
        a = alpha_after_chain(a);
        n -= 2;
      } else {
        a = alpha_after_parallel(a);
        n -= 1;
      }
      c -= 1;
      REQUIRE(a == lexmin_alpha(n, c));
    }
  }
}
