#pragma once
// Deterministic CSV output. Numbers are formatted locale-free with 12
// significant digits; files carry their resolved configuration in comment
// lines and contain nothing volatile, so a rerun is byte-identical.

#include <cstdint>
#include <string>
#include <vector>

namespace dsirr {

// shortest-faithful representation at 12 significant digits (general format)
std::string format_number(double v);
std::string format_int(std::int64_t v);

class CsvWriter {
public:
    // every '# key: value' comment line goes above the header row
    void comment(const std::string& key, const std::string& value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

    const std::string& str() const { return text_; }
    void write_file(const std::string& path) const;  // throws on I/O failure

private:
    std::string text_;
    std::size_t n_columns_ = 0;
};

}  // namespace dsirr
