#ifndef SVRPLL_SEPARATION_HPP_
#define SVRPLL_SEPARATION_HPP_

#include <vector>

#include "svrpll/instance.hpp"
#include "svrpll/model.hpp"

namespace svrpll {

// Edges of E* = {e : x*_e > threshold}; all targets are vertices.
struct SupportGraph {
  int num_vertices = 0;
  std::vector<EdgeId> edges;
  std::vector<double> weights;
};

inline constexpr double kSupportThreshold = 1e-7;
inline constexpr double kCutViolationTol = 1e-6;

// `edge_values` is indexed by EdgeIndex ordinal.
SupportGraph support_graph(const std::vector<double>& edge_values,
                           int num_targets,
                           double threshold = kSupportThreshold);

// Partition of the vertices, each component sorted ascending, components
// ordered by their smallest vertex.
std::vector<std::vector<int>> connected_components(const SupportGraph& g);

struct CutResult {
  double value = 0.0;
  std::vector<int> side;  // sorted; never empty, never all vertices
};

// Stoer-Wagner.  Requires a connected graph with at least two vertices
// (PreconditionError otherwise).  Ties in the maximum-adjacency order go to
// the lowest vertex index.
CutResult global_min_cut(const SupportGraph& g);

// SEC rows violated by the point: one per component of size 2..n-2 when the
// support graph is disconnected, otherwise the global minimum cut when its
// value is below 2 - tol.
std::vector<Row> separate_secs(const std::vector<double>& edge_values,
                               int num_targets,
                               double tol = kCutViolationTol);

}  // namespace svrpll

#endif  // SVRPLL_SEPARATION_HPP_
