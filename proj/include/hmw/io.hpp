#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hmw {

// CSV conventions: comma separator, '.' decimal point, mandatory header,
// 17 significant digits (round-trip exact for doubles), '\n' line endings.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(const std::vector<double>& values);
    const std::string& text() const { return buffer_; }
    void write_file(const std::string& path) const;

  private:
    std::string buffer_;
    std::size_t columns_;
};

std::string format_double(double v); // %.17g with '.' decimal point

// Serialize with a stable layout (sorted keys, 2-space indent, '\n'-terminated)
// so identical inputs give byte-identical files.
void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace hmw
