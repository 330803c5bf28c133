#include "svrpll/separation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "svrpll/errors.hpp"

namespace svrpll {

SupportGraph support_graph(const std::vector<double>& edge_values,
                           int num_targets, double threshold) {
  const EdgeIndex index(num_targets);
  if (static_cast<int>(edge_values.size()) < index.num_edges()) {
    throw PreconditionError("support_graph: too few edge values");
  }
  SupportGraph g;
  g.num_vertices = num_targets;
  for (int e = 0; e < index.num_edges(); ++e) {
    if (edge_values[e] > threshold) {
      g.edges.push_back(index.edge(e));
      g.weights.push_back(edge_values[e]);
    }
  }
  return g;
}

std::vector<std::vector<int>> connected_components(const SupportGraph& g) {
  std::vector<int> parent(static_cast<size_t>(g.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const EdgeId& e : g.edges) {
    const int a = find(e.i);
    const int b = find(e.j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> slot(static_cast<size_t>(g.num_vertices), -1);
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < g.num_vertices; ++v) {
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].push_back(v);
  }
  return comps;
}

CutResult global_min_cut(const SupportGraph& g) {
  const int n = g.num_vertices;
  if (n < 2) throw PreconditionError("global_min_cut: need >= 2 vertices");
  if (connected_components(g).size() != 1) {
    throw PreconditionError("global_min_cut: graph is disconnected");
  }
  std::vector<std::vector<double>> w(static_cast<size_t>(n),
                                     std::vector<double>(n, 0.0));
  for (size_t t = 0; t < g.edges.size(); ++t) {
    w[g.edges[t].i][g.edges[t].j] += g.weights[t];
    w[g.edges[t].j][g.edges[t].i] += g.weights[t];
  }
  // members[v]: original vertices merged into super-vertex v.
  std::vector<std::vector<int>> members(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) members[v] = {v};
  std::vector<char> alive(static_cast<size_t>(n), 1);

  CutResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<double> key(static_cast<size_t>(n));
  std::vector<char> added(static_cast<size_t>(n));
  for (int phase = n; phase > 1; --phase) {
    std::fill(key.begin(), key.end(), 0.0);
    std::fill(added.begin(), added.end(), 0);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < phase; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || added[v]) continue;
        if (pick < 0 || key[v] > key[pick]) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int v = 0; v < n; ++v) {
        if (alive[v] && !added[v]) key[v] += w[pick][v];
      }
    }
    // Cut of the phase: `last` against everything else.
    if (key[last] < best.value) {
      best.value = key[last];
      best.side = members[last];
    }
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    alive[last] = 0;
    for (int v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0.0;
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

std::vector<Row> separate_secs(const std::vector<double>& edge_values,
                               int num_targets, double tol) {
  std::vector<Row> rows;
  if (num_targets < 4) return rows;  // no S with 2 <= |S| <= n-2
  const SupportGraph g = support_graph(edge_values, num_targets);
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    for (const auto& c : comps) {
      const int size = static_cast<int>(c.size());
      if (size >= 2 && size <= num_targets - 2) {
        rows.push_back(make_sec_row(c, num_targets));
      }
    }
    return rows;
  }
  const CutResult cut = global_min_cut(g);
  const int size = static_cast<int>(cut.side.size());
  if (cut.value < 2.0 - tol && size >= 2 && size <= num_targets - 2) {
    rows.push_back(make_sec_row(cut.side, num_targets));
  }
  return rows;
}

}  // namespace svrpll
