#pragma once

#include "noma/sim.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace noma {

/// Output file could not be created or replaced.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

/// A table cell. Reals are rendered with kSignificantDigits digits.
using Cell = std::variant<double, std::int64_t, std::string>;

inline constexpr int kSignificantDigits = 9;

/// Fixed-column table plus free-form metadata (JSON only).
struct OutputRecord {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> meta;
};

/// "%.9g" rendering shared by both formats.
std::string format_real(double value);

/// Comma-separated, '.' decimal, LF line endings, header row first.
/// Fields containing a comma or quote are double-quoted.
std::string to_csv(const OutputRecord& record);

/// {"meta": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}.
/// Reals carry the same 9-digit values as the CSV rendering.
std::string to_json(const OutputRecord& record);

std::string render(const OutputRecord& record, OutputFormat format);

/// Writes to a temporary sibling and renames it over `path`, so `path` is
/// never left half-written. Throws OutputError.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// snr_db, one column per series, then "<series>_se" standard-error columns.
OutputRecord sweep_record(const SweepResult& result);

}  // namespace noma
