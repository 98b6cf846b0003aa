#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace levykit {

// Locale-independent CSV: '.' decimal separator, ',' field separator, '\n'
// line endings, %.17g numbers. Deterministic byte-for-byte for fixed inputs.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& fields);

private:
    std::ofstream out_;
};

std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);

}  // namespace levykit
