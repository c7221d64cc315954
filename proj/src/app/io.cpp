#include "vms/app/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace vms::app {

std::string sci3(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2e", x);
  std::string s(buf);
  // compress "e-02" / "e+02" to the paper-style bare exponent "e-2" / "e2"
  const auto e = s.find('e');
  std::string mant = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  bool neg = false;
  if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
    neg = exp[0] == '-';
    exp.erase(0, 1);
  }
  while (exp.size() > 1 && exp[0] == '0') exp.erase(0, 1);
  return mant + "e" + (neg ? "-" : "") + exp;
}

std::string fixed3(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

std::string convergence_csv_header() {
  return "case,dt,inv_h,e_u,roc_u,e_c,roc_c,e_p,roc_p,total,roc_total,total_sum";
}

namespace {

std::string roc_cell(const std::optional<double>& roc) {
  return roc ? fixed3(*roc) : "";
}

}  // namespace

std::string convergence_csv_row(const RocRow& row) {
  std::ostringstream os;
  os << row.label << "," << sci3(row.dt) << "," << row.inv_h << "," << sci3(row.err.e_u) << ","
     << roc_cell(row.roc_u) << "," << sci3(row.err.e_c) << "," << roc_cell(row.roc_c) << ","
     << sci3(row.err.e_p) << "," << roc_cell(row.roc_p) << "," << sci3(row.err.total) << ","
     << roc_cell(row.roc_total) << "," << sci3(row.err.total_sum);
  return os.str();
}

void write_convergence_csv(const std::string& path, const std::vector<RocRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << convergence_csv_header() << "\n";
  for (const auto& row : rows) out << convergence_csv_row(row) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void print_convergence_table(const std::vector<RocRow>& rows) {
  std::printf("%-18s %-9s %5s  %9s %-6s %9s %-6s %9s %-6s %9s %-6s\n", "case", "dt", "1/h", "e_u",
              "RoC", "e_c", "RoC", "e_p", "RoC", "total", "RoC");
  for (const auto& row : rows) {
    std::printf("%-18s %-9s %5d  %9s %-6s %9s %-6s %9s %-6s %9s %-6s\n", row.label.c_str(),
                sci3(row.dt).c_str(), row.inv_h, sci3(row.err.e_u).c_str(),
                roc_cell(row.roc_u).c_str(), sci3(row.err.e_c).c_str(), roc_cell(row.roc_c).c_str(),
                sci3(row.err.e_p).c_str(), roc_cell(row.roc_p).c_str(), sci3(row.err.total).c_str(),
                roc_cell(row.roc_total).c_str());
  }
  std::fflush(stdout);
}

void emit_vtk(const Mesh& mesh, const FieldState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.precision(17);
  const int n = mesh.n_nodes();
  out << "# vtk DataFile Version 3.0\n";
  out << "flow and transport fields\n";
  out << "ASCII\n";
  out << "DATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << n << " double\n";
  for (const auto& p : mesh.nodes) out << p[0] << " " << p[1] << " 0\n";
  out << "CELLS " << mesh.n_elements() << " " << 4 * mesh.n_elements() << "\n";
  for (const auto& tri : mesh.triangles) out << "3 " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
  out << "CELL_TYPES " << mesh.n_elements() << "\n";
  for (int k = 0; k < mesh.n_elements(); ++k) out << "5\n";
  out << "POINT_DATA " << n << "\n";
  out << "VECTORS velocity double\n";
  for (int i = 0; i < n; ++i) out << state.u1[i] << " " << state.u2[i] << " 0\n";
  out << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
  for (int i = 0; i < n; ++i) out << state.p[i] << "\n";
  out << "SCALARS concentration double 1\nLOOKUP_TABLE default\n";
  for (int i = 0; i < n; ++i) out << state.c[i] << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::vector<std::array<double, 3>> read_vtk_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::string word;
  int n = -1;
  while (in >> word) {
    if (word == "POINTS") {
      in >> n >> word;  // count, dtype
      break;
    }
  }
  if (n < 0) throw std::runtime_error("no POINTS block in '" + path + "'");
  std::vector<std::array<double, 3>> pts(n);
  for (auto& p : pts) {
    if (!(in >> p[0] >> p[1] >> p[2])) throw std::runtime_error("truncated POINTS in '" + path + "'");
  }
  return pts;
}

void write_streamfunction_csv(const Mesh& mesh, const StreamFunctionField& psi,
                              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "# extremum_x,extremum_y,extremum_psi\n";
  out.precision(17);
  out << "# " << psi.extremum_xy[0] << "," << psi.extremum_xy[1] << "," << psi.extremum_value
      << "\n";
  out << "x,y,psi\n";
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    out << mesh.nodes[i][0] << "," << mesh.nodes[i][1] << "," << psi.psi[i] << "\n";
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_centerline_csv(const CenterlineProfiles& prof, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.precision(17);
  out << "y,u1_at_x0.5,x,u2_at_y0.5\n";
  for (size_t i = 0; i < prof.y.size(); ++i) {
    out << prof.y[i] << "," << prof.u1_mid[i] << "," << prof.x[i] << "," << prof.u2_mid[i] << "\n";
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string resolve_out_dir(const std::string& configured) {
  std::string dir = configured;
  if (const char* env = std::getenv("VMSFLOW_OUT_DIR"); env && *env) dir = env;
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace vms::app
