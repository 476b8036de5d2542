#pragma once

#include <string>
#include <vector>

#include "grassflow/filament.hpp"
#include "grassflow/loops.hpp"

namespace grassflow {

// Polyline snapshot format: one "i,x,y,z" line per vertex, loops separated
// by a blank line.
std::string format_polylines(const std::vector<DiscreteLoop>& loops);
void write_polylines(const std::string& path, const std::vector<DiscreteLoop>& loops);
std::vector<std::vector<Vec3>> parse_polylines(const std::string& text);
std::vector<DiscreteLoop> read_polylines(const std::string& path, const AmbientSpace& space);

// Diagnostics CSV: header row, comma separated, '.' decimal.
// Columns: step,time,length,max_dual_length_drift,com_x,com_y,com_z
std::string format_diagnostics_csv(const std::vector<DiagnosticsRow>& rows);
void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);

// shortest round-trippable decimal representation
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace grassflow
