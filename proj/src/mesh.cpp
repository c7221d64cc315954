#include "vms/mesh.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vms {

Mesh build_structured_mesh(int n_div) {
  if (n_div < 1) {
    throw std::invalid_argument("build_structured_mesh: n_div must be >= 1");
  }
  Mesh m;
  m.n_div = n_div;
  const int np = n_div + 1;
  m.nodes.reserve(static_cast<std::size_t>(np) * np);
  m.boundary_tag.assign(static_cast<std::size_t>(np) * np, side_none);

  for (int j = 0; j < np; ++j) {
    for (int i = 0; i < np; ++i) {
      const double x = static_cast<double>(i) / n_div;
      const double y = static_cast<double>(j) / n_div;
      m.nodes.push_back({x, y});
      unsigned char tag = side_none;
      if (i == 0) tag |= side_left;
      if (i == n_div) tag |= side_right;
      if (j == 0) tag |= side_bottom;
      if (j == n_div) tag |= side_top;
      m.boundary_tag[static_cast<std::size_t>(j) * np + i] = tag;
    }
  }

  const auto vid = [np](int i, int j) { return j * np + i; };
  m.triangles.reserve(2u * n_div * n_div);
  for (int j = 0; j < n_div; ++j) {
    for (int i = 0; i < n_div; ++i) {
      const int v00 = vid(i, j);
      const int v10 = vid(i + 1, j);
      const int v01 = vid(i, j + 1);
      const int v11 = vid(i + 1, j + 1);
      // SW-NE diagonal, both triangles counter-clockwise
      m.triangles.push_back({v00, v10, v11});
      m.triangles.push_back({v00, v11, v01});
    }
  }

  const double diag = std::sqrt(2.0) / n_div;
  m.h_k.assign(m.triangles.size(), diag);
  m.h = diag;
  return m;
}

ElementGeometry element_geometry(const Mesh& mesh, int k) {
  const auto& tri = mesh.triangles.at(static_cast<std::size_t>(k));
  const auto& p0 = mesh.nodes[tri[0]];
  const auto& p1 = mesh.nodes[tri[1]];
  const auto& p2 = mesh.nodes[tri[2]];

  const double det = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]);
  if (det <= 0.0) {
    throw std::runtime_error("element_geometry: non-positive element area");
  }
  ElementGeometry g;
  g.area = 0.5 * det;
  // grad(lambda_i) is the inward normal of the opposite edge over 2*area
  g.grad[0] = {(p1[1] - p2[1]) / det, (p2[0] - p1[0]) / det};
  g.grad[1] = {(p2[1] - p0[1]) / det, (p0[0] - p2[0]) / det};
  g.grad[2] = {(p0[1] - p1[1]) / det, (p1[0] - p0[0]) / det};
  g.h_k = mesh.h_k[static_cast<std::size_t>(k)];
  return g;
}

std::string dump_mesh(const Mesh& mesh) {
  std::ostringstream os;
  os << "nodes " << mesh.n_nodes() << "\n";
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    os << i << " " << mesh.nodes[i][0] << " " << mesh.nodes[i][1] << " "
       << static_cast<int>(mesh.boundary_tag[i]) << "\n";
  }
  os << "triangles " << mesh.n_elements() << "\n";
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const auto& t = mesh.triangles[k];
    os << k << " " << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  return os.str();
}

}  // namespace vms
