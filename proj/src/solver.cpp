#include "critgraph/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "critgraph/errors.hpp"

namespace critgraph {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::exact: return "exact";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::above_cutoff: return "above_cutoff";
  }
  return "?";
}

bool is_cover(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) {
    if (v >= g.num_vertices()) throw InvalidArgument("cover vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

namespace {

using Word = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Beyond this the dense bitset rows get too large to be worth it; callers
// receive the greedy cover flagged budget_exceeded.
constexpr std::size_t kMaxDenseVertices = 20000;

// Repeatedly takes a maximum-degree vertex (lowest index on ties) among the
// alive ones until no alive edge remains.
VertexSet max_degree_greedy(const Graph& g, std::vector<char> alive) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges())
    if (alive[e.u] && alive[e.v]) {
      ++deg[e.u];
      ++deg[e.v];
    }
  VertexSet cover;
  while (true) {
    Vertex pick = kNoVertex;
    std::size_t best = 0;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && deg[v] > best) {
        best = deg[v];
        pick = v;
      }
    if (pick == kNoVertex) break;
    cover.push_back(pick);
    alive[pick] = 0;
    for (Vertex w : g.neighbors(pick))
      if (alive[w]) --deg[w];
  }
  return cover;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SolveBudget& budget)
      : g_(g), n_(g.num_vertices()), words_((n_ + 63) / 64), adj_(n_ * words_, 0), pool_((n_ + 2) * words_, 0),
        scratch_(words_, 0), budget_(budget), start_(Clock::now()) {
    for (const Edge& e : g.edges()) {
      set_bit(row(e.u), e.v);
      set_bit(row(e.v), e.u);
    }
  }

  // `alive` lists the undecided vertices, `preset` the vertices already
  // committed to the cover.
  SolveResult run(const std::vector<char>& alive, const VertexSet& preset, std::optional<std::size_t> cutoff) {
    Word* root = frame(0);
    std::fill(root, root + words_, 0);
    for (Vertex v = 0; v < n_; ++v)
      if (alive[v]) set_bit(root, v);

    VertexSet greedy = greedy_cover(alive);
    const std::size_t greedy_size = preset.size() + greedy.size();
    bound_ = greedy_size;
    have_best_ = true;
    best_ = preset;
    best_.insert(best_.end(), greedy.begin(), greedy.end());
    if (cutoff && *cutoff < greedy_size) {
      bound_ = *cutoff + 1;
      have_best_ = false;
    }
    VertexSet fallback = preset;
    fallback.insert(fallback.end(), greedy.begin(), greedy.end());

    chosen_ = preset;
    search(0, preset.size());

    SolveResult r;
    r.stats.nodes = nodes_;
    r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    if (have_best_) {
      r.cover = std::move(best_);
      r.status = aborted_ ? SolveStatus::budget_exceeded : SolveStatus::exact;
    } else {
      r.cover = std::move(fallback);
      r.status = aborted_ ? SolveStatus::budget_exceeded : SolveStatus::above_cutoff;
    }
    normalize(r.cover);
    r.size = r.cover.size();
    return r;
  }

 private:
  Word* row(Vertex v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  const Word* row(Vertex v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  Word* frame(std::size_t depth) { return pool_.data() + depth * words_; }
  static void set_bit(Word* s, Vertex v) { s[v >> 6] |= Word{1} << (v & 63); }
  static void clear_bit(Word* s, Vertex v) { s[v >> 6] &= ~(Word{1} << (v & 63)); }

  std::size_t degree_in(Vertex v, const Word* alive) const {
    const Word* r = row(v);
    std::size_t d = 0;
    for (std::size_t k = 0; k < words_; ++k) d += std::popcount(r[k] & alive[k]);
    return d;
  }

  Vertex first_neighbor_in(Vertex v, const Word* alive) const {
    const Word* r = row(v);
    for (std::size_t k = 0; k < words_; ++k)
      if (Word w = r[k] & alive[k]) return static_cast<Vertex>(k * 64 + std::countr_zero(w));
    return kNoVertex;
  }

  template <typename F>
  void for_each_bit(const Word* s, F&& f) const {
    for (std::size_t k = 0; k < words_; ++k)
      for (Word w = s[k]; w; w &= w - 1) f(static_cast<Vertex>(k * 64 + std::countr_zero(w)));
  }

  bool empty(const Word* s) const {
    for (std::size_t k = 0; k < words_; ++k)
      if (s[k]) return false;
    return true;
  }

  VertexSet greedy_cover(const std::vector<char>& alive) const { return max_degree_greedy(g_, alive); }

  bool out_of_budget() {
    if (aborted_) return true;
    if (nodes_ >= budget_.max_nodes) aborted_ = true;
    else if ((nodes_ & 255) == 0 && Clock::now() - start_ > budget_.max_time) aborted_ = true;
    return aborted_;
  }

  void record(std::size_t count) {
    bound_ = count;
    best_ = chosen_;
    have_best_ = true;
  }

  // Greedy clique partition of the alive set; each clique of size k forces
  // k - 1 cover vertices.
  std::size_t clique_cover_bound(const Word* alive) {
    Word* rest = scratch_.data();
    std::copy(alive, alive + words_, rest);
    std::size_t lb = 0;
    std::vector<Word>& cand = cand_;
    cand.resize(words_);
    for (std::size_t k = 0; k < words_; ++k) {
      while (rest[k]) {
        const auto v = static_cast<Vertex>(k * 64 + std::countr_zero(rest[k]));
        clear_bit(rest, v);
        const Word* r = row(v);
        for (std::size_t i = 0; i < words_; ++i) cand[i] = r[i] & rest[i];
        for (std::size_t i = 0; i < words_; ++i) {
          while (cand[i]) {
            const auto w = static_cast<Vertex>(i * 64 + std::countr_zero(cand[i]));
            clear_bit(rest, w);
            ++lb;
            const Word* rw = row(w);
            for (std::size_t j = 0; j < words_; ++j) cand[j] &= rw[j];
          }
        }
      }
    }
    return lb;
  }

  void search(std::size_t depth, std::size_t count) {
    ++nodes_;
    if (out_of_budget()) return;
    const std::size_t mark = chosen_.size();
    Word* alive = frame(depth);

    // Degree-0 and degree-1 reductions to a fixed point.
    bool changed = true;
    while (changed && count < bound_) {
      changed = false;
      for (std::size_t k = 0; k < words_; ++k) {
        for (Word w = alive[k]; w; w &= w - 1) {
          const auto v = static_cast<Vertex>(k * 64 + std::countr_zero(w));
          if (!((alive[v >> 6] >> (v & 63)) & 1)) continue;
          const std::size_t d = degree_in(v, alive);
          if (d == 0) {
            clear_bit(alive, v);
          } else if (d == 1) {
            const Vertex u = first_neighbor_in(v, alive);
            chosen_.push_back(u);
            ++count;
            clear_bit(alive, u);
            clear_bit(alive, v);
            changed = true;
          }
        }
      }
    }
    if (count >= bound_) {
      chosen_.resize(mark);
      return;
    }
    if (empty(alive)) {
      record(count);
      chosen_.resize(mark);
      return;
    }

    Vertex pivot = kNoVertex;
    std::size_t max_deg = 0;
    for_each_bit(alive, [&](Vertex v) {
      const std::size_t d = degree_in(v, alive);
      if (d > max_deg) {
        max_deg = d;
        pivot = v;
      }
    });

    if (max_deg <= 2) {
      close_cycles(alive, count);
      chosen_.resize(mark);
      return;
    }

    if (count + clique_cover_bound(alive) >= bound_) {
      chosen_.resize(mark);
      return;
    }

    Word* next = frame(depth + 1);
    const std::size_t reduced = chosen_.size();
    // pivot joins the cover
    std::copy(alive, alive + words_, next);
    clear_bit(next, pivot);
    chosen_.push_back(pivot);
    search(depth + 1, count + 1);
    chosen_.resize(reduced);

    // all of N(pivot) joins the cover
    if (!aborted_ && count + max_deg < bound_) {
      std::copy(alive, alive + words_, next);
      clear_bit(next, pivot);
      const Word* r = row(pivot);
      for (std::size_t k = 0; k < words_; ++k) {
        for (Word w = r[k] & alive[k]; w; w &= w - 1) chosen_.push_back(static_cast<Vertex>(k * 64 + std::countr_zero(w)));
        next[k] &= ~r[k];
      }
      search(depth + 1, count + max_deg);
    }
    chosen_.resize(mark);
  }

  // Every alive vertex has degree exactly 2, so the alive set is a union of
  // cycles; alternate vertices plus one extra per odd cycle is optimal.
  void close_cycles(Word* alive, std::size_t count) {
    std::copy(alive, alive + words_, scratch_.data());
    Word* rest = scratch_.data();
    for (std::size_t k = 0; k < words_; ++k) {
      while (rest[k]) {
        const auto start = static_cast<Vertex>(k * 64 + std::countr_zero(rest[k]));
        Vertex prev = kNoVertex, cur = start;
        std::size_t pos = 0;
        while (true) {
          clear_bit(rest, cur);
          if (pos % 2 == 1) {
            chosen_.push_back(cur);
            ++count;
          }
          Vertex nxt = kNoVertex;
          const Word* r = row(cur);
          for (std::size_t i = 0; i < words_ && nxt == kNoVertex; ++i)
            for (Word w = r[i] & alive[i]; w; w &= w - 1) {
              const auto c = static_cast<Vertex>(i * 64 + std::countr_zero(w));
              if (c != prev && ((rest[c >> 6] >> (c & 63)) & 1)) {
                nxt = c;
                break;
              }
            }
          ++pos;
          if (nxt == kNoVertex) break;
          prev = cur;
          cur = nxt;
        }
        if (pos % 2 == 1) {
          chosen_.push_back(start);
          ++count;
        }
      }
    }
    if (count < bound_) record(count);
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> adj_;
  std::vector<Word> pool_;
  std::vector<Word> scratch_;
  std::vector<Word> cand_;
  SolveBudget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t bound_ = 0;
  bool have_best_ = false;
  VertexSet best_;
  VertexSet chosen_;
};

}  // namespace

SolveResult mvc(const Graph& g, const SolveBudget& budget) { return mvc_constrained(g, {}, {}, budget); }

SolveResult mvc_constrained(const Graph& g, std::span<const Vertex> forced_in, std::span<const Vertex> forced_out,
                            const SolveBudget& budget, std::optional<std::size_t> cutoff) {
  const std::size_t n = g.num_vertices();
  if (budget.max_nodes == 0 || budget.max_time.count() <= 0) throw InvalidArgument("solve budget must be positive");
  std::vector<char> state(n, 0);  // 1 = forced in, 2 = forced out
  for (Vertex v : forced_in) {
    if (v >= n) throw InvalidArgument("forced_in vertex out of range");
    state[v] = 1;
  }
  for (Vertex v : forced_out) {
    if (v >= n) throw InvalidArgument("forced_out vertex out of range");
    if (state[v] == 1) throw InvalidArgument("vertex " + std::to_string(v) + " is both forced in and forced out");
    state[v] = 2;
  }

  VertexSet preset;
  std::vector<char> alive(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    if (state[v] != 2) continue;
    alive[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (state[w] == 2) {
        SolveResult r;
        r.status = SolveStatus::infeasible;
        return r;
      }
      if (alive[w]) {
        alive[w] = 0;
        preset.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (state[v] == 1 && alive[v]) {
      alive[v] = 0;
      preset.push_back(v);
    }
  normalize(preset);

  if (n > kMaxDenseVertices) {
    // Too large for the dense kernel: hand back a valid cover, unproven.
    SolveResult r;
    r.cover = preset;
    auto greedy = max_degree_greedy(g, alive);
    r.cover.insert(r.cover.end(), greedy.begin(), greedy.end());
    normalize(r.cover);
    r.size = r.cover.size();
    r.status = SolveStatus::budget_exceeded;
    return r;
  }

  BranchAndBound bb(g, budget);
  return bb.run(alive, preset, cutoff);
}

}  // namespace critgraph
