#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace critgraph {

/// Clique-size multiplicities with at most two nonzero entries, at
/// consecutive sizes g and g + 1, describing how a budget of n vertices
/// with cover c splits into cliques (a K_i uses i vertices and i - 1 cover
/// vertices). The empty vector stands for n = c = 0.
class AlphaVector {
 public:
  AlphaVector() = default;
  /// Entries: low_count cliques of size low, high_count of size low + 1.
  AlphaVector(std::size_t low, std::size_t low_count, std::size_t high_count);

  std::size_t count(std::size_t size) const;
  std::size_t n() const { return n_; }
  std::size_t c() const { return c_; }
  std::size_t cliques() const { return low_count_ + high_count_; }
  bool empty() const { return cliques() == 0; }
  /// Smallest and largest clique size present (0 when empty).
  std::size_t min_size() const;
  std::size_t max_size() const;
  /// Nonzero entries as (size, count), largest size first.
  std::vector<std::pair<std::size_t, std::size_t>> entries() const;
  std::string to_string() const;

  friend bool operator==(const AlphaVector& a, const AlphaVector& b) { return a.entries() == b.entries(); }

 private:
  void settle();

  std::size_t low_ = 1;
  std::size_t low_count_ = 0;
  std::size_t high_count_ = 0;
  std::size_t n_ = 0;
  std::size_t c_ = 0;
};

/// Lexicographically minimal vector (compared from the largest clique size
/// down) among all splits of n vertices with cover c. Requires n > c, or
/// n = c = 0 for the empty vector.
AlphaVector lexmin_alpha(std::size_t n, std::size_t c);

/// Sum of i (i - 1) / 2 over all cliques: the fewest edges a union of
/// cliques with this budget can have.
std::size_t alpha_edge_lower_bound(const AlphaVector& a);

/// Largest edge count of a graph on n vertices with cover c:
/// c (c - 1) / 2 + c (n - c). Requires n > c.
std::size_t max_edges(std::size_t n, std::size_t c);

/// Budget left after a parallel extension (one vertex, one cover vertex).
bool parallel_fits(const AlphaVector& a);
AlphaVector alpha_after_parallel(const AlphaVector& a);

/// Budget left after a chain extension (two vertices, one cover vertex).
bool chain_fits(const AlphaVector& a);
AlphaVector alpha_after_chain(const AlphaVector& a);

}  // namespace critgraph
