#include "critgraph/alpha.hpp"

#include "critgraph/errors.hpp"

namespace critgraph {

AlphaVector::AlphaVector(std::size_t low, std::size_t low_count, std::size_t high_count)
    : low_(low), low_count_(low_count), high_count_(high_count) {
  if (low == 0) throw InvalidArgument("clique sizes start at 1");
  settle();
}

void AlphaVector::settle() {
  if (low_count_ == 0 && high_count_ > 0) {
    ++low_;
    low_count_ = high_count_;
    high_count_ = 0;
  }
  if (low_count_ == 0) low_ = 1;
  n_ = low_ * low_count_ + (low_ + 1) * high_count_;
  c_ = (low_ - 1) * low_count_ + low_ * high_count_;
}

std::size_t AlphaVector::count(std::size_t size) const {
  if (size == low_) return low_count_;
  if (size == low_ + 1) return high_count_;
  return 0;
}

std::size_t AlphaVector::min_size() const { return empty() ? 0 : low_; }

std::size_t AlphaVector::max_size() const {
  if (empty()) return 0;
  return high_count_ ? low_ + 1 : low_;
}

std::vector<std::pair<std::size_t, std::size_t>> AlphaVector::entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (high_count_) out.emplace_back(low_ + 1, high_count_);
  if (low_count_) out.emplace_back(low_, low_count_);
  return out;
}

std::string AlphaVector::to_string() const {
  std::string s;
  for (const auto& [size, cnt] : entries()) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(size) + "=" + std::to_string(cnt);
  }
  return s.empty() ? "empty" : s;
}

AlphaVector lexmin_alpha(std::size_t n, std::size_t c) {
  if (n == 0 && c == 0) return {};
  if (n <= c) throw InvalidArgument("lexmin_alpha needs n > c");
  const std::size_t k = n - c;  // number of cliques
  const std::size_t g = c / k + 1;
  const std::size_t h = (c + k - 1) / k + 1;
  if (h == g) return AlphaVector(g, k, 0);
  const std::size_t ah = c % k;
  return AlphaVector(g, k - ah, ah);
}

std::size_t alpha_edge_lower_bound(const AlphaVector& a) {
  std::size_t total = 0;
  for (const auto& [size, cnt] : a.entries()) total += size * (size - 1) / 2 * cnt;
  return total;
}

std::size_t max_edges(std::size_t n, std::size_t c) {
  if (n <= c) throw InvalidArgument("max_edges needs n > c");
  return c * (c - 1) / 2 + c * (n - c);
}

bool parallel_fits(const AlphaVector& a) { return a.c() >= 1; }

AlphaVector alpha_after_parallel(const AlphaVector& a) {
  if (!parallel_fits(a)) throw InfeasibleError("no cover budget left for a parallel extension");
  // One clique of the largest size h shrinks to size h - 1.
  const std::size_t g = a.min_size();
  if (a.max_size() == g + 1) return AlphaVector(g, a.count(g) + 1, a.count(g + 1) - 1);
  return AlphaVector(g - 1, 1, a.count(g) - 1);
}

bool chain_fits(const AlphaVector& a) {
  if (a.c() < 1) return false;
  return a.n() - a.c() >= 2 || (a.n() == 2 && a.c() == 1);
}

AlphaVector alpha_after_chain(const AlphaVector& a) {
  if (!chain_fits(a)) throw InfeasibleError("budget cannot absorb a chain extension");
  std::size_t g = a.min_size();
  const std::size_t h = a.max_size();
  std::size_t tg = a.count(g) - 1;  // drop one clique of the smallest size g
  std::size_t tg1 = h == g + 1 ? a.count(g + 1) : 0;
  if (g == 1) {
    // Dropping a K1 frees one vertex too many; turning a K2 into a K1
    // returns it, so in effect one K2 disappears.
    return AlphaVector(1, tg + 1, tg1 - 1);
  }
  // The dropped clique held g vertices but only 2 may go, so g - 2 vertices
  // are handed back by growing cliques one size up.
  std::size_t s = g - 2;
  if (tg > s) return AlphaVector(g, tg - s, tg1 + s);
  tg1 += tg;
  s -= tg;
  ++g;
  // All remaining cliques now have size g.
  const std::size_t t = tg1;
  if (t > 0 && s >= t) {
    const std::size_t d = s / t;
    g += d;
    s -= d * t;
  }
  if (s > 0 && s < t) return AlphaVector(g, t - s, s);
  return AlphaVector(g, t, 0);
}

}  // namespace critgraph
