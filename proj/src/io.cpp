#include "grassflow/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace grassflow {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_polylines(const std::vector<DiscreteLoop>& loops) {
    std::string out;
    bool first = true;
    for (const DiscreteLoop& loop : loops) {
        if (!first) out += "\n";
        first = false;
        for (int i = 0; i < loop.size(); ++i) {
            const Vec3& v = loop.vertex(i);
            out += std::to_string(i) + "," + format_double(v.x) + "," + format_double(v.y) + "," +
                   format_double(v.z) + "\n";
        }
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_polylines(const std::string& path, const std::vector<DiscreteLoop>& loops) {
    write_text_file(path, format_polylines(loops));
}

std::vector<std::vector<Vec3>> parse_polylines(const std::string& text) {
    std::vector<std::vector<Vec3>> out;
    std::vector<Vec3> current;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line == "\r") {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
            continue;
        }
        int idx = 0;
        double x = 0, y = 0, z = 0;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &idx, &x, &y, &z) != 4)
            throw Error("malformed polyline line: " + line);
        current.push_back({x, y, z});
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::vector<DiscreteLoop> read_polylines(const std::string& path, const AmbientSpace& space) {
    std::vector<DiscreteLoop> loops;
    for (auto& vertices : parse_polylines(read_text_file(path)))
        loops.emplace_back(space, std::move(vertices));
    return loops;
}

std::string format_diagnostics_csv(const std::vector<DiagnosticsRow>& rows) {
    std::string out = "step,time,length,max_dual_length_drift,com_x,com_y,com_z\n";
    for (const DiagnosticsRow& r : rows) {
        out += std::to_string(r.step) + "," + format_double(r.time) + "," +
               format_double(r.length) + "," + format_double(r.max_dual_length_drift) + "," +
               format_double(r.center_of_mass.x) + "," + format_double(r.center_of_mass.y) + "," +
               format_double(r.center_of_mass.z) + "\n";
    }
    return out;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows) {
    write_text_file(path, format_diagnostics_csv(rows));
}

}  // namespace grassflow
