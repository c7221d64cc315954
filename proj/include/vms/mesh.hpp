#pragma once

#include <array>
#include <string>
#include <vector>

namespace vms {

// Bitmask tags for the four sides of the unit square.
enum BoundarySide : unsigned char {
  side_none = 0,
  side_left = 1,
  side_right = 2,
  side_bottom = 4,
  side_top = 8,
};

struct ElementGeometry {
  double area;
  // grad[i] = gradient of the barycentric function attached to local node i.
  std::array<std::array<double, 2>, 3> grad;
  double h_k;
};

// Structured triangulation of (0,1)^2: n_div x n_div cells, each split by
// the SW-NE diagonal. Node ordering is lexicographic by (y, x).
struct Mesh {
  std::vector<std::array<double, 2>> nodes;
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise
  std::vector<unsigned char> boundary_tag;    // BoundarySide bitmask per node
  std::vector<double> h_k;
  double h = 0.0;
  int n_div = 0;

  int n_nodes() const { return static_cast<int>(nodes.size()); }
  int n_elements() const { return static_cast<int>(triangles.size()); }
  bool is_boundary(int node) const { return boundary_tag[node] != side_none; }
  bool on_side(int node, BoundarySide s) const { return (boundary_tag[node] & s) != 0; }
};

Mesh build_structured_mesh(int n_div);

ElementGeometry element_geometry(const Mesh& mesh, int k);

// Plain-text node/element listing for debugging.
std::string dump_mesh(const Mesh& mesh);

}  // namespace vms
