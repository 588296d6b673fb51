// Internal helpers shared by the map, reduction and growth code.
#pragma once

#include "spider/web.hpp"

#include <vector>

namespace spider::detail {

// BFS labels from the boundary (top, then bottom), -1 for vertices not
// reachable from the boundary. Labels are isotopy invariants.
std::vector<int> canonical_labels(const PlanarMap &m);

// The map with boundary arcs added: boundary vertices gain two arc
// half-edges [web, next, prev]; a base vertex P sits between the last and
// first boundary vertex in clockwise order. Web half-edge indices are kept.
struct DiskMap {
  PlanarMap map;
  std::vector<bool> is_arc;   // per half-edge
  std::vector<int> face_of;   // per half-edge, face index (outer face = -1)
  std::vector<std::vector<int>> faces; // half-edge cycles, outer face excluded
  int base = -1;              // vertex P
  // gap_arc[k]: prev-arc half-edge whose face touches gap k (k = 0..n for n
  // top points); only built for invariant webs.
  std::vector<int> gap_arc;
};

DiskMap disk_map(const PlanarMap &m);

// Drops dead vertices with their half-edges and renumbers the rest. Live
// half-edges must have live twins.
void compact(PlanarMap &m, const std::vector<bool> &dead);

} // namespace spider::detail
