#pragma once

// Random extension sequences shared by the extension tests and the
// acceptance suite.

#include "critgraph/extensions.hpp"
#include "critgraph/rng.hpp"

namespace walks {

using namespace critgraph;

/// One uniformly chosen parallel, chain or split step at a random site.
inline TrackedGraph random_step(const TrackedGraph& tg, CounterRng& rng) {
  const Graph& g = tg.graph;
  const auto n = g.num_vertices();
  switch (rng.below(3)) {
    case 0: return parallel_extend(tg, static_cast<Vertex>(rng.below(n)));
    case 1: {
      const Edge e = g.edges()[rng.below(g.num_edges())];
      return rng.below(2) ? chain_extend(tg, e.u, e.v) : chain_extend(tg, e.v, e.u);
    }
    default: {
      const auto u = static_cast<Vertex>(rng.below(n));
      std::vector<Vertex> nb(g.neighbors(u).begin(), g.neighbors(u).end());
      for (std::size_t i = nb.size(); i > 1; --i) std::swap(nb[i - 1], nb[rng.below(i)]);
      nb.resize(1 + rng.below(nb.size() - 1));
      return split_vertex(tg, u, nb);
    }
  }
}

inline TrackedGraph random_walk(std::uint64_t seed, std::size_t steps) {
  auto rng = CounterRng::for_phase(seed, "extension-walk");
  TrackedGraph tg = seed_k3();
  for (std::size_t i = 0; i < steps; ++i) tg = random_step(tg, rng);
  return tg;
}

}  // namespace walks
