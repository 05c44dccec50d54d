#include "ctp/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace ctp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell, std::size_t line_no) {
    const std::string_view t = trim(cell);
    if (t.empty()) {
        throw CsvError(line_no, "empty cell where a number was expected");
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw CsvError(line_no, "not a number: '" + std::string(t) + "'");
    }
    return value;
}

}  // namespace

std::vector<double> read_numeric_column(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = options.has_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const auto cells = split(line, options.delimiter);
        if (options.column >= cells.size()) {
            throw CsvError(line_no, "column " + std::to_string(options.column) +
                                        " out of range (row has " +
                                        std::to_string(cells.size()) + " cells)");
        }
        if (options.filter_year) {
            if (options.year_column >= cells.size()) {
                throw CsvError(line_no, "year column " + std::to_string(options.year_column) +
                                            " out of range");
            }
            const double year = parse_cell(cells[options.year_column], line_no);
            if (static_cast<long>(year) != *options.filter_year) continue;
        }
        values.push_back(parse_cell(cells[options.column], line_no));
    }
    return values;
}

}  // namespace ctp
