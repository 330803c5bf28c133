#ifndef SVRPLL_INSTANCE_HPP_
#define SVRPLL_INSTANCE_HPP_

#include <cstdint>
#include <vector>

namespace svrpll {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(const Point2& a, const Point2& b);

// A routing problem with landmark-based localization.  Target 0 is the depot.
struct Instance {
  std::vector<Point2> targets;
  std::vector<Point2> candidate_sites;
  double sensing_range = 35.0;
  std::vector<double> landmark_cost;  // one entry per candidate site
  std::int64_t seed = 0;

  int num_targets() const { return static_cast<int>(targets.size()); }
  int num_sites() const { return static_cast<int>(candidate_sites.size()); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws ParameterError when the instance breaks a structural invariant
// (fewer than two targets, non-finite coordinates, nonpositive range,
// negative or missing landmark costs).
void check_instance(const Instance& inst);

// Undirected edge between targets i < j.
struct EdgeId {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Dense ordinal numbering of the edges of the complete graph on n targets,
// in lexicographic (i, j) order.
class EdgeIndex {
 public:
  explicit EdgeIndex(int num_targets);

  int num_targets() const { return n_; }
  int num_edges() const { return n_ * (n_ - 1) / 2; }

  int ordinal(int i, int j) const;  // accepts either order, i != j
  int ordinal(EdgeId e) const { return ordinal(e.i, e.j); }
  EdgeId edge(int ordinal) const { return edges_[ordinal]; }
  const std::vector<EdgeId>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<EdgeId> edges_;
};

// Candidate sites within sensing range of each target and of both endpoints
// of each edge.  All site lists are sorted ascending.
struct CoverSets {
  std::vector<std::vector<int>> per_target;
  std::vector<std::vector<int>> per_edge;  // indexed by EdgeIndex ordinal

  const std::vector<int>& of_edge(const EdgeIndex& index, EdgeId e) const {
    return per_edge[index.ordinal(e)];
  }
};

// Travel costs indexed by EdgeIndex ordinal.
struct EdgeCosts {
  std::vector<double> cost;
};

struct GenerateOptions {
  int num_targets = 15;
  std::int64_t seed = 0;
  double grid_side = 100.0;
  int site_factor = 5;
  double sensing_range = 35.0;
};

// Targets and sites uniform on [0, grid_side]^2, unit landmark costs.
// Targets and sites come from separate random streams.
Instance generate_instance(const GenerateOptions& opts);

CoverSets compute_cover_sets(const Instance& inst);
EdgeCosts compute_edge_costs(const Instance& inst);

struct ValidationReport {
  // Per target: incident edges whose cover set holds at least two sites.
  std::vector<int> coverable_degree;
  std::vector<int> deficient_targets;  // coverable_degree < 2
  bool infeasible_certain = false;
};

ValidationReport validate_instance(const Instance& inst, const CoverSets& cov);

}  // namespace svrpll

#endif  // SVRPLL_INSTANCE_HPP_
