#include "accelflow/csv.hpp"

#include "accelflow/error.hpp"

#include <charconv>
#include <fstream>

namespace accelflow {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& traj) {
    traj.validate();
    const int n = traj.dim();
    const auto energy = traj.channels.find("energy");
    const auto restart = traj.channels.find("restart");
    std::string out = "k,t";
    for (int i = 0; i < n; ++i) {
        out += ",x_" + std::to_string(i);
    }
    out += ",f";
    if (energy != traj.channels.end()) {
        out += ",energy";
    }
    if (restart != traj.channels.end()) {
        out += ",restart";
    }
    out += '\n';
    for (std::size_t k = 0; k < traj.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_double(traj.times[k]);
        for (int i = 0; i < n; ++i) {
            out += ',';
            out += format_double(traj.points[k](i));
        }
        out += ',';
        out += format_double(traj.f_values[k]);
        if (energy != traj.channels.end()) {
            out += ',';
            out += format_double(energy->second[k]);
        }
        if (restart != traj.channels.end()) {
            out += restart->second[k] != 0.0 ? ",1" : ",0";
        }
        out += '\n';
    }
    return out;
}

std::string metrics_csv(const std::vector<MetricRow>& rows) {
    std::string out = "pair,window_lo,window_hi,mean_err_ref,mean_err_cand,reduction_pct\n";
    for (const MetricRow& r : rows) {
        out += r.pair + ',' + std::to_string(r.window_lo) + ',' + std::to_string(r.window_hi) + ',' +
               format_double(r.mean_err_ref) + ',' + format_double(r.mean_err_cand) + ',' +
               format_double(r.reduction_pct) + '\n';
    }
    return out;
}

std::string table_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out += (i ? "," : "") + header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw ArgumentError("table_csv: row width differs from header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

} // namespace accelflow
