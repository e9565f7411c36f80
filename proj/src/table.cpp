#include "qslbath/table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qslbath {

void ResultTable::require_rectangular() const {
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw std::runtime_error("ResultTable: row width " + std::to_string(row.size()) +
                                     " does not match " + std::to_string(columns.size()) +
                                     " columns");
        }
    }
}

std::size_t ResultTable::column_index(const std::string& name) const {
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] == name) return k;
    }
    throw std::out_of_range("ResultTable: no column named '" + name + "'");
}

std::vector<double> ResultTable::column(const std::string& name) const {
    const std::size_t index = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row.at(index));
    return out;
}

std::string format_full_precision(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string to_csv(const ResultTable& table) {
    table.require_rectangular();
    std::ostringstream out;
    for (const auto& [key, value] : table.metadata) {
        out << "# " << key << ": " << value << "\n";
    }
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
        out << (k ? "," : "") << table.columns[k];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << (k ? "," : "") << format_full_precision(row[k]);
        }
        out << "\n";
    }
    return out.str();
}

void write_csv(const ResultTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open '" + path.string() + "'");
    out << to_csv(table);
    if (!out) throw std::runtime_error("write_csv: failed writing '" + path.string() + "'");
}

ResultTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open '" + path.string() + "'");
    ResultTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::size_t colon = line.find(':');
            if (colon == std::string::npos) {
                table.metadata.emplace_back(line.substr(1), "");
                continue;
            }
            std::string key = line.substr(1, colon - 1);
            std::string value = line.substr(colon + 1);
            if (!key.empty() && key.front() == ' ') key.erase(0, 1);
            if (!value.empty() && value.front() == ' ') value.erase(0, 1);
            table.metadata.emplace_back(std::move(key), std::move(value));
            continue;
        }
        std::istringstream cells(line);
        std::string cell;
        if (!header_seen) {
            while (std::getline(cells, cell, ',')) table.columns.push_back(cell);
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        table.rows.push_back(std::move(row));
    }
    table.require_rectangular();
    return table;
}

}  // namespace qslbath
