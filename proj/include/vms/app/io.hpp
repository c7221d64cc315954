#pragma once

#include <string>
#include <vector>

#include "vms/cavity_post.hpp"
#include "vms/fe_core.hpp"
#include "vms/verification.hpp"

namespace vms::app {

// "4.48e-3" style: 3 significant digits, bare exponent without padding.
std::string sci3(double x);
// "0.973" style: fixed, 3 decimals.
std::string fixed3(double x);

std::string convergence_csv_header();
std::string convergence_csv_row(const RocRow& row);

void write_convergence_csv(const std::string& path, const std::vector<RocRow>& rows);
void print_convergence_table(const std::vector<RocRow>& rows);

void emit_vtk(const Mesh& mesh, const FieldState& state, const std::string& path);
// Re-parse only the POINTS block of a legacy-VTK file (round-trip checks).
std::vector<std::array<double, 3>> read_vtk_points(const std::string& path);

void write_streamfunction_csv(const Mesh& mesh, const StreamFunctionField& psi,
                              const std::string& path);
void write_centerline_csv(const CenterlineProfiles& prof, const std::string& path);

// Output directory: config value unless the override environment variable
// VMSFLOW_OUT_DIR is set; created on demand.
std::string resolve_out_dir(const std::string& configured);

}  // namespace vms::app
