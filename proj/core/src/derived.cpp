#include "tlg/derived.hpp"

#include <algorithm>
#include <deque>

namespace tlg {

DerivedGraph::DerivedGraph(Graph base, std::vector<Triangle> tris)
    : base_(std::move(base)), triangles_(std::move(tris)) {
  const int m = static_cast<int>(triangles_.size());
  adj_.resize(m);
  for (TriId i = 0; i < m; ++i) {
    for (TriId j = i + 1; j < m; ++j) {
      // Two distinct triangles share at most one edge.
      std::optional<Edge> common;
      for (const Edge& e : triangles_[i].edges()) {
        if (triangles_[j].contains(e)) {
          common = e;
          break;
        }
      }
      if (common) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
        shared_.emplace(std::make_pair(i, j), *common);
      }
    }
  }
  by_node_.resize(base_.node_count());
  for (TriId i = 0; i < m; ++i)
    for (NodeId v : triangles_[i].nodes) by_node_[v].push_back(i);
}

DerivedGraph DerivedGraph::build(const Graph& g) {
  if (!is_tlg(g)) throw NotTlgError("derived graph requires a TLG");
  return DerivedGraph(g, enumerate_triangles(g));
}

const std::vector<TriId>& DerivedGraph::neighbors(TriId t) const {
  return adj_.at(t);
}

bool DerivedGraph::adjacent(TriId i, TriId j) const {
  if (i == j) return false;
  return shared_.count({std::min(i, j), std::max(i, j)}) != 0;
}

Edge DerivedGraph::shared_edge(TriId i, TriId j) const {
  auto it = shared_.find({std::min(i, j), std::max(i, j)});
  if (it == shared_.end())
    throw std::invalid_argument("triangles are not adjacent");
  return it->second;
}

std::optional<TriId> DerivedGraph::tri_index(const Triangle& t) const {
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
  if (it == triangles_.end() || !(*it == t)) return std::nullopt;
  return static_cast<TriId>(it - triangles_.begin());
}

const std::vector<TriId>& DerivedGraph::triangles_containing(NodeId v) const {
  if (v < 0 || v >= base_.node_count())
    throw std::invalid_argument("node id out of range");
  return by_node_[v];
}

namespace {

bool reaches(const std::vector<std::vector<TriId>>& adj, TriId from, TriId to,
             TriId removed) {
  if (from == removed) return false;
  std::vector<char> seen(adj.size(), 0);
  std::deque<TriId> q{from};
  seen[from] = 1;
  while (!q.empty()) {
    TriId t = q.front();
    q.pop_front();
    if (t == to) return true;
    for (TriId u : adj[t]) {
      if (u != removed && !seen[u]) {
        seen[u] = 1;
        q.push_back(u);
      }
    }
  }
  return false;
}

}  // namespace

TriId DerivedGraph::bottleneck(NodeId v, TriId target) const {
  const std::vector<TriId>& sub = triangles_containing(v);
  if (target < 0 || target >= size())
    throw std::invalid_argument("target triangle out of range");
  if (std::find(sub.begin(), sub.end(), target) != sub.end()) return target;

  // Candidate whose removal cuts every node of the subgraph off from target.
  TriId found = -1;
  for (TriId b : sub) {
    bool cuts = true;
    for (TriId s : sub) {
      if (s != b && reaches(adj_, s, target, b)) {
        cuts = false;
        break;
      }
    }
    if (cuts) {
      if (found >= 0) throw std::logic_error("bottleneck is not unique");
      found = b;
    }
  }
  if (found < 0) throw std::logic_error("bottleneck does not exist");
  return found;
}

Edge verify_cycle_common_edge(const DerivedGraph& d,
                              const std::vector<TriId>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("cycle too short");
  for (size_t i = 0; i < cycle.size(); ++i) {
    TriId a = cycle[i];
    TriId b = cycle[(i + 1) % cycle.size()];
    if (!d.adjacent(a, b)) throw std::invalid_argument("not a cycle in D_G");
  }

  std::array<Edge, 3> first = d.triangles()[cycle[0]].edges();
  std::vector<Edge> common(first.begin(), first.end());
  for (size_t i = 1; i < cycle.size(); ++i) {
    const Triangle& t = d.triangles()[cycle[i]];
    std::erase_if(common, [&](const Edge& e) { return !t.contains(e); });
  }
  if (common.size() != 1)
    throw std::logic_error("derived cycle without a unique common base edge");

  for (size_t i = 0; i < cycle.size(); ++i)
    for (size_t j = i + 1; j < cycle.size(); ++j)
      if (!d.adjacent(cycle[i], cycle[j]))
        throw std::logic_error("derived cycle does not induce a clique");
  return common[0];
}

}  // namespace tlg
