#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "critgraph/criticality.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

/// Circulant graph on 0..n-1 where i is adjacent to i + j and i - j (mod n)
/// for every offset j.
struct CirculantSpec {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
};

/// Throws InvalidArgument if n < 2 or some offset is a multiple of n.
Graph build_circulant(const CirculantSpec& spec);

/// Consecutive offsets 1..d_h.
Graph cnd_graph(std::size_t n, std::size_t d_h);

/// n - ceil((n - d_h) / (d_h + 1)); requires n > d_h.
std::size_t cnd_mvc_size(std::size_t n, std::size_t d_h);

/// n <= 2 d_h + 1, or n - d_h divisible by d_h + 1; requires n > d_h >= 1.
bool cnd_is_critical(std::size_t n, std::size_t d_h);

/// is_critical specialised to circulants: rotations act transitively on the
/// edges of each offset class, so one edge {0, d} per distinct distance d
/// suffices. Witness edges are the lowest such representative.
CriticalityVerdict classify_circulant(const CirculantSpec& spec, const SolveBudget& budget = {});

struct SearchRow {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;  // beyond the implicit offset 1
  Criticality verdict = Criticality::unknown;
  std::size_t cover_size = 0;
  std::size_t edges = 0;
  std::uint64_t nodes = 0;

  friend bool operator==(const SearchRow&, const SearchRow&) = default;
};

struct SearchOptions {
  int degree = 6;  // 4: L = {1, j}; 6: L = {1, i, j} with i < j
  std::size_t n_min = 4;
  std::size_t n_max = 60;
  std::size_t offset_min = 2;
  std::size_t offset_max = 20;
  SolveBudget budget{100'000'000, std::chrono::milliseconds{30'000}};
  std::size_t workers = 1;
};

/// Classifies every tuple of the grid. Offsets are taken from
/// [offset_min, min(offset_max, n - 1)], so no offset reaches n. Rows come
/// back in (n, offsets) order whatever the worker count.
std::vector<SearchRow> search_critical(const SearchOptions& opt);

/// The rows whose verdict is critical.
std::vector<SearchRow> critical_rows(const std::vector<SearchRow>& rows);

/// CSV with header n,offsets,verdict,c,m,nodes; offsets are space separated
/// and include the leading 1.
void write_catalog_csv(std::ostream& out, const std::vector<SearchRow>& rows);
std::string catalog_csv(const std::vector<SearchRow>& rows);

}  // namespace critgraph
