#ifndef TWODIST_OUTPUT_HPP
#define TWODIST_OUTPUT_HPP

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace twodist {

enum class OutputFormat { csv, json, pretty };

/// Throws std::invalid_argument on anything but csv, json or pretty.
OutputFormat parse_format(std::string_view name);
std::string_view format_name(OutputFormat format);

struct OutputConfig {
    OutputFormat format = OutputFormat::csv;
    /// Significant digits for real numbers, 1..17.
    int precision = 12;
    /// Empty means standard output.
    std::string destination;

    void validate() const;
};

/// Shortest representation of v with at most `precision` significant digits;
/// infinities become "inf" / "-inf".
std::string format_real(double v, int precision);

/// v rounded to `precision` significant digits, i.e. the value format_real prints.
double round_to_precision(double v, int precision);

using Cell = std::variant<long long, double, bool, std::string, std::vector<double>>;

/// A tabular result plus self-describing metadata, rendered as CSV, JSON or text.
struct Report {
    std::string command;
    /// Flag values recorded in the provenance line / meta object, in key order.
    std::map<std::string, std::string> meta;
    /// JSON array name: "rows" or "samples".
    std::string records_key = "rows";
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> records;

    void add(std::vector<Cell> record) { records.push_back(std::move(record)); }
};

/// CSV: provenance comment line, header row, one line per record, '\n' endings.
/// Lists inside a cell are ';'-separated.
std::string render_csv(const Report& report, int precision);
/// JSON: {"meta": {...}, "<records_key>": [{column: value, ...}, ...]}; infinities as "inf".
std::string render_json(const Report& report, int precision);
std::string render_pretty(const Report& report, int precision);

std::string render(const Report& report, const OutputConfig& config);

} // namespace twodist

#endif // TWODIST_OUTPUT_HPP
