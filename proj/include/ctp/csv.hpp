#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctp {

struct CsvOptions {
    std::size_t column = 0;  // 0-based
    char delimiter = ',';
    bool has_header = false;
    std::optional<long> filter_year;  // keep rows whose year_column matches
    std::size_t year_column = 1;
};

/// Parse failure with the 1-based line number of the offending row.
class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// One numeric column from a delimited text file. Blank lines are ignored;
/// a non-numeric cell raises CsvError with its line number. Throws
/// std::runtime_error when the file cannot be opened.
std::vector<double> read_numeric_column(const std::string& path, const CsvOptions& options = {});

}  // namespace ctp
