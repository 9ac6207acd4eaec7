#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "drst/errors.hpp"
#include "drst/geometry.hpp"

namespace drst {

enum class NodeKind { plain, stop, diversion };

NodeKind node_kind_from_string(const std::string& s);
const char* to_string(NodeKind k);

struct Node {
  int id = 0;
  Point position;
  NodeKind kind = NodeKind::plain;
};

struct Link {
  int from = 0;
  int to = 0;
  double length_km = 0.0;  // defaults to the Euclidean distance when loaded
};

// A branch route. path is the full traversal from the diversion-node entry
// back onto the fixed route; path.front() is the entry, path.back() the exit.
struct FlexRoute {
  int id = 0;
  std::vector<int> path;

  int entry() const { return path.front(); }
  int exit() const { return path.back(); }
};

// Immutable after construction; safe to share read-only across runs.
class RouteNetwork {
 public:
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<int>& fixed_route() const { return fixed_route_; }
  const std::vector<FlexRoute>& flex_routes() const { return flex_routes_; }

  const Node& node(int id) const;
  bool has_node(int id) const { return node_index_.count(id) > 0; }
  double link_length(int a, int b) const;  // throws BrokenRoute if absent
  bool has_link(int a, int b) const;

  // All stop node ids, ascending.
  const std::vector<int>& stops() const { return stops_; }
  // Stop node ids lying on the fixed route, in route order from fixed_route()[0].
  const std::vector<int>& fixed_route_stops() const { return fixed_stops_; }
  // Stop node ids on a flexible route's interior (entry/exit excluded).
  const std::vector<int>& stops_on_flex(int flex_id) const;

  const FlexRoute& flex(int flex_id) const;
  // Flexible routes entered at this node, ascending id. Empty if none.
  std::span<const int> flex_entered_at(int node_id) const;

  bool on_fixed_route(int node_id) const { return fixed_pos_.count(node_id) > 0; }
  // Index of a node within fixed_route(); throws if not on it.
  std::size_t fixed_route_index(int node_id) const;
  double fixed_route_length_km() const { return fixed_length_km_; }
  double flex_length_km(int flex_id) const;

  // Stop minimizing the Euclidean distance to the point; ties broken by
  // lowest stop id. Throws NoStops on a stopless network.
  std::pair<int, double> nearest_stop(const Point& p) const;

  // Re-runs all structural invariant checks; throws on violation. Idempotent.
  void validate() const;

 private:
  friend RouteNetwork build_network(std::vector<Node> nodes, std::vector<Link> links,
                                    std::vector<int> fixed_route_ids,
                                    std::vector<FlexRoute> flex_route_defs);

  static std::uint64_t link_key(int a, int b);

  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<int> fixed_route_;  // closed loop, stored without the repeated endpoint
  std::vector<FlexRoute> flex_routes_;  // ascending id

  std::unordered_map<int, std::size_t> node_index_;
  std::unordered_map<std::uint64_t, double> link_length_;
  std::unordered_map<int, std::size_t> fixed_pos_;
  std::unordered_map<int, std::vector<int>> flex_at_node_;
  std::unordered_map<int, std::vector<int>> flex_stops_;
  std::vector<int> stops_;
  std::vector<int> fixed_stops_;
  double fixed_length_km_ = 0.0;
};

// Validates all type invariants and returns the assembled network.
// A fixed route given with a repeated closing node ("1 ... 1") is normalized.
RouteNetwork build_network(std::vector<Node> nodes, std::vector<Link> links,
                           std::vector<int> fixed_route_ids,
                           std::vector<FlexRoute> flex_route_defs);

// A concrete node sequence a vehicle travels, as a polyline with cumulative
// offsets. Cyclic plans wrap from the last node back to the first.
struct ServicePlan {
  std::vector<int> nodes;
  std::vector<double> cum_km;  // cum_km[i] = offset of nodes[i] from nodes[0]
  bool cyclic = false;
  double closing_km = 0.0;  // cyclic only: length of the wrap-around link

  double total_km() const { return cyclic ? cum_km.back() + closing_km : cum_km.back(); }
};

// The fixed route as a cyclic plan.
ServicePlan loop_plan(const RouteNetwork& net);
// An acyclic plan over consecutive linked nodes.
ServicePlan path_plan(const RouteNetwork& net, std::span<const int> node_ids);

// Nonnegative arc distance from one offset to another along the traversal
// direction. Offsets must lie in [0, total]; on acyclic plans the destination
// offset must not precede the origin.
double plan_distance(const ServicePlan& plan, double from_offset_km, double to_offset_km);

}  // namespace drst
