#include "twodist/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twodist {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_precision(int precision)
{
    if (precision < 1 || precision > 17) {
        throw std::invalid_argument("precision must lie in [1, 17], got " + std::to_string(precision));
    }
}

std::string cell_text(const Cell& cell, int precision)
{
    return std::visit(overloaded{
                          [](long long v) { return std::to_string(v); },
                          [&](double v) { return format_real(v, precision); },
                          [](bool v) { return std::string(v ? "true" : "false"); },
                          [](const std::string& v) { return v; },
                          [&](const std::vector<double>& v) {
                              std::string out;
                              for (std::size_t i = 0; i < v.size(); ++i) {
                                  if (i > 0) {
                                      out += ';';
                                  }
                                  out += format_real(v[i], precision);
                              }
                              return out;
                          },
                      },
                      cell);
}

nlohmann::json real_json(double v, int precision)
{
    if (std::isfinite(v)) {
        return round_to_precision(v, precision);
    }
    return format_real(v, precision);
}

nlohmann::json cell_json(const Cell& cell, int precision)
{
    return std::visit(overloaded{
                          [](long long v) { return nlohmann::json(v); },
                          [&](double v) { return real_json(v, precision); },
                          [](bool v) { return nlohmann::json(v); },
                          [](const std::string& v) { return nlohmann::json(v); },
                          [&](const std::vector<double>& v) {
                              nlohmann::json arr = nlohmann::json::array();
                              for (double x : v) {
                                  arr.push_back(real_json(x, precision));
                              }
                              return arr;
                          },
                      },
                      cell);
}

std::string csv_field(std::string text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        quoted += ch;
        if (ch == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

std::string provenance(const Report& report)
{
    std::string line = "# twodist " TWODIST_VERSION " " + report.command;
    for (const auto& [key, value] : report.meta) {
        line += " " + key + "=" + value;
    }
    return line;
}

} // namespace

OutputFormat parse_format(std::string_view name)
{
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "pretty") {
        return OutputFormat::pretty;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string_view format_name(OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::json:
        return "json";
    case OutputFormat::pretty:
        return "pretty";
    }
    return "csv";
}

void OutputConfig::validate() const
{
    check_precision(precision);
}

std::string format_real(double v, int precision)
{
    check_precision(precision);
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    // Shortest round-trip form of the value already rounded to `precision` digits.
    const double rounded = round_to_precision(v, precision);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, rounded);
    return std::string(buf, res.ptr);
}

double round_to_precision(double v, int precision)
{
    check_precision(precision);
    if (!std::isfinite(v)) {
        return v;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, precision - 1);
    double out = 0.0;
    std::from_chars(buf, res.ptr, out);
    return out;
}

std::string render_csv(const Report& report, int precision)
{
    std::string out = provenance(report) + "\n";
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out += (i ? "," : "") + report.columns[i];
    }
    out += "\n";
    for (const auto& record : report.records) {
        for (std::size_t i = 0; i < record.size(); ++i) {
            out += (i ? "," : "") + csv_field(cell_text(record[i], precision));
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const Report& report, int precision)
{
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta;
    meta["tool"] = "twodist";
    meta["version"] = TWODIST_VERSION;
    meta["command"] = report.command;
    for (const auto& [key, value] : report.meta) {
        meta[key] = value;
    }
    doc["meta"] = meta;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& record : report.records) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < record.size() && i < report.columns.size(); ++i) {
            obj[report.columns[i]] = cell_json(record[i], precision);
        }
        records.push_back(obj);
    }
    doc[report.records_key] = records;
    return doc.dump(2) + "\n";
}

std::string render_pretty(const Report& report, int precision)
{
    std::vector<std::vector<std::string>> cells;
    cells.push_back(report.columns);
    for (const auto& record : report.records) {
        std::vector<std::string> line;
        for (const auto& cell : record) {
            line.push_back(cell_text(cell, precision));
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(report.columns.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
            width[i] = std::max(width[i], line[i].size());
        }
    }
    std::ostringstream os;
    os << provenance(report) << "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        for (std::size_t i = 0; i < cells[r].size() && i < width.size(); ++i) {
            if (i > 0) {
                os << "  ";
            }
            os << std::string(width[i] - cells[r][i].size(), ' ') << cells[r][i];
        }
        os << "\n";
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t w : width) {
                total += w;
            }
            os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << "\n";
        }
    }
    return os.str();
}

std::string render(const Report& report, const OutputConfig& config)
{
    config.validate();
    switch (config.format) {
    case OutputFormat::csv:
        return render_csv(report, config.precision);
    case OutputFormat::json:
        return render_json(report, config.precision);
    case OutputFormat::pretty:
        return render_pretty(report, config.precision);
    }
    return render_csv(report, config.precision);
}

} // namespace twodist
