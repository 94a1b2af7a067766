#include "tlg/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlg {

namespace {

void dfs_tour(const DerivedGraph& d, TriId v, std::vector<char>& seen,
              std::vector<TriId>& tour) {
  seen[v] = 1;
  tour.push_back(v);
  for (TriId u : d.neighbors(v)) {
    if (!seen[u]) {
      dfs_tour(d, u, seen, tour);
      tour.push_back(v);
    }
  }
}

}  // namespace

std::vector<TriId> periodic_exhaustive_walk(const DerivedGraph& d, TriId start,
                                            int length) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  if (start < 0 || start >= d.size())
    throw std::invalid_argument("bad start triangle");

  std::vector<char> seen(d.size(), 0);
  std::vector<TriId> tour;
  dfs_tour(d, start, seen, tour);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::logic_error("derived graph is disconnected");
  // The tour ends back at start; drop it so the periodic pattern's last node
  // is the neighbor it returned from (or the single node itself).
  if (tour.size() > 1) tour.pop_back();

  std::vector<TriId> walk(length);
  for (int i = 0; i < length; ++i) walk[i] = tour[i % tour.size()];
  return walk;
}

std::vector<TriId> simple_random_walk(const DerivedGraph& d, TriId start,
                                      int length, std::uint64_t seed) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  if (start < 0 || start >= d.size())
    throw std::invalid_argument("bad start triangle");
  Rng rng(seed);
  std::vector<TriId> walk;
  walk.reserve(length);
  walk.push_back(start);
  while (static_cast<int>(walk.size()) < length) {
    const auto& nb = d.neighbors(walk.back());
    if (nb.empty()) {
      walk.push_back(walk.back());  // one-triangle derived graph
    } else {
      walk.push_back(nb[rng.below(static_cast<int>(nb.size()))]);
    }
  }
  return walk;
}

std::vector<TriId> uniform_random_sequence(const DerivedGraph& d, int length,
                                           std::uint64_t seed) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  Rng rng(seed);
  std::vector<TriId> seq(length);
  for (TriId& t : seq) t = rng.below(d.size());
  return seq;
}

bool is_exhaustive(const DerivedGraph& d, std::span<const TriId> walk,
                   ExhaustiveMode mode, int period) {
  const int m = d.size();
  if (mode == ExhaustiveMode::Finite) {
    std::vector<char> seen(m, 0);
    for (TriId t : walk) seen.at(t) = 1;
    return std::count(seen.begin(), seen.end(), 1) == m;
  }
  if (period < 1) throw std::invalid_argument("window mode needs a period");
  for (size_t off = 0; off + period <= walk.size(); off += period) {
    std::vector<char> seen(m, 0);
    for (int i = 0; i < period; ++i) seen.at(walk[off + i]) = 1;
    if (std::count(seen.begin(), seen.end(), 1) != m) return false;
  }
  return true;
}

}  // namespace tlg
