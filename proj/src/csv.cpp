#include "dsirr/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace dsirr {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 12);
    if (res.ec != std::errc())
        throw std::runtime_error("format_number: to_chars failed");
    return std::string(buf, res.ptr);
}

std::string format_int(std::int64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void CsvWriter::comment(const std::string& key, const std::string& value) {
    text_ += "# ";
    text_ += key;
    text_ += ": ";
    text_ += value;
    text_ += '\n';
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    n_columns_ = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) text_ += ',';
        text_ += columns[i];
    }
    text_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (n_columns_ && values.size() != n_columns_)
        throw std::logic_error("CsvWriter: row width differs from header");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text_ += ',';
        text_ += format_number(values[i]);
    }
    text_ += '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (n_columns_ && cells.size() != n_columns_)
        throw std::logic_error("CsvWriter: row width differs from header");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(text_.data(), static_cast<std::streamsize>(text_.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dsirr
