#pragma once

#include <string>
#include <vector>

namespace murmur {

/// Rectangular CSV with a mandatory header row; numeric payload written
/// with 12 significant digits.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

std::string format_sig12(double v);

}  // namespace murmur
