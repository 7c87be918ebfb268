#include "hmw/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hmw {

std::string format_double(double v) {
    char buf[64];
    // C locale formatting regardless of the process locale: %.17g never
    // produces grouping characters, and the decimal point is patched below
    // in case a widened locale leaked into snprintf
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s(buf);
    for (char& c : s)
        if (c == ',') c = '.';
    return s;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    if (header.empty()) throw std::invalid_argument("header: must not be empty");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += header[i];
    }
    buffer_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
    if (values.size() != columns_)
        throw std::invalid_argument("row: column count does not match the header");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += format_double(values[i]);
    }
    buffer_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("out: cannot open " + path + " for writing");
    out << buffer_;
    if (!out) throw std::runtime_error("out: write failed for " + path);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("out: cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("out: write failed for " + path);
}

} // namespace hmw
