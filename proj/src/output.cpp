#include "noma/output.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include <unistd.h>

namespace noma {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", kSignificantDigits, value);
    return buffer;
}

namespace {

std::string csv_field(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_real(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    const auto& s = std::get<std::string>(cell);
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

nlohmann::ordered_json json_value(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        // Re-parse the 9-digit text so JSON and CSV carry the same number.
        return std::strtod(format_real(*d).c_str(), nullptr);
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return *i;
    }
    return std::get<std::string>(cell);
}

}  // namespace

std::string to_csv(const OutputRecord& record) {
    std::string out;
    for (std::size_t c = 0; c < record.columns.size(); ++c) {
        out += (c == 0 ? "" : ",") + csv_field(record.columns[c]);
    }
    out += '\n';
    for (const auto& row : record.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c == 0 ? "" : ",") + csv_field(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const OutputRecord& record) {
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.meta) {
        doc["meta"][key] = json_value(value);
    }
    doc["columns"] = record.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : record.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size() && c < record.columns.size(); ++c) {
            obj[record.columns[c]] = json_value(row[c]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + '\n';
}

std::string render(const OutputRecord& record, OutputFormat format) {
    return format == OutputFormat::csv ? to_csv(record) : to_json(record);
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path temp = path;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw OutputError("cannot open " + temp.string() + " for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw OutputError("failed writing " + temp.string());
        }
    }
    std::error_code ec;
    fs::rename(temp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(temp, ignored);
        throw OutputError("cannot move output into place at " + path.string() + ": " +
                          ec.message());
    }
}

OutputRecord sweep_record(const SweepResult& result) {
    OutputRecord record;
    record.meta = {
        {"mode", std::string(to_string(result.mode))},
        {"users", static_cast<std::int64_t>(result.users)},
        {"trials", static_cast<std::int64_t>(result.trials)},
        {"seed", std::to_string(result.seed)},
    };
    record.columns.push_back("snr_db");
    for (const auto& name : result.series) {
        record.columns.push_back(name);
    }
    for (const auto& name : result.series) {
        record.columns.push_back(name + "_se");
    }
    for (const auto& row : result.rows) {
        std::vector<Cell> cells;
        cells.emplace_back(row.snr_db);
        for (const double m : row.means) {
            cells.emplace_back(m);
        }
        for (const double se : row.std_errors) {
            cells.emplace_back(se);
        }
        record.rows.push_back(std::move(cells));
    }
    return record;
}

}  // namespace noma
