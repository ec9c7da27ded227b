#include "fduffing/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "fduffing/errors.hpp"

namespace fduffing {

namespace {

void append_cell(std::string& line, const std::optional<double>& v) {
    line += ',';
    if (v) line += format_double(*v);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || first == last) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::string trajectory_csv(const Trajectory& tr) {
    std::string out = "t,x,y,aux\n";
    for (std::size_t k = 0; k < tr.size(); ++k) {
        out += format_double(tr.t[k]);
        out += ',';
        out += format_double(tr.x[k]);
        out += ',';
        out += format_double(tr.y[k]);
        out += ',';
        out += format_double(tr.aux[k]);
        out += '\n';
    }
    return out;
}

std::string diff_csv(const Trajectory& a, const Trajectory& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("diff_csv: trajectories have different lengths");
    }
    std::string out = "t,abs_dx\n";
    for (std::size_t k = 0; k < a.size(); ++k) {
        out += format_double(a.t[k]);
        out += ',';
        out += format_double(std::abs(a.x[k] - b.x[k]));
        out += '\n';
    }
    return out;
}

std::string convergence_csv(const ConvergenceReport& report) {
    std::string out = "N,h,xi_efds,p_efds,xi_abm,p_abm,p2_efds,p2_abm\n";
    for (const auto& row : report.rows) {
        std::string line = std::to_string(row.n);
        append_cell(line, row.h);
        append_cell(line, row.xi_efds);
        append_cell(line, row.p_efds);
        append_cell(line, row.xi_abm);
        append_cell(line, row.p_abm);
        append_cell(line, row.p2_efds);
        append_cell(line, row.p2_abm);
        out += line;
        out += '\n';
    }
    return out;
}

Trajectory parse_trajectory_csv(std::string_view text, Scheme scheme) {
    Trajectory tr;
    tr.scheme = scheme;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != "t,x,y,aux") {
                throw IoError("line " + std::to_string(line_no) + ": expected header 't,x,y,aux'");
            }
            header_seen = true;
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 4) {
            throw IoError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                          std::to_string(cells.size()));
        }
        try {
            tr.t.push_back(parse_double(cells[0]));
            tr.x.push_back(parse_double(cells[1]));
            tr.y.push_back(parse_double(cells[2]));
            tr.aux.push_back(parse_double(cells[3]));
        } catch (const std::invalid_argument& e) {
            throw IoError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!header_seen) throw IoError("line 1: missing header 't,x,y,aux'");
    if (tr.size() == 0) throw IoError("line " + std::to_string(line_no) + ": no data rows");
    return tr;
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
    try {
        return parse_trajectory_csv(read_file(path));
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move " + tmp.string() + " to " + path.string());
    }
}

}  // namespace fduffing
