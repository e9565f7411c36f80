// table.hpp — rectangular result tables with an ordered metadata block,
// serialized as CSV with #-prefixed header lines and 17-significant-digit
// numbers so values round-trip exactly.

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace qslbath {

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void require_rectangular() const;
    std::size_t column_index(const std::string& name) const;
    std::vector<double> column(const std::string& name) const;
};

std::string format_full_precision(double value);

std::string to_csv(const ResultTable& table);
void write_csv(const ResultTable& table, const std::filesystem::path& path);
ResultTable read_csv(const std::filesystem::path& path);

}  // namespace qslbath
