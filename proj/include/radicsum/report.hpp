#pragma once

// Serialization of reports: aligned text tables, CSV and JSON. All numbers
// are written with 17 significant digits so every double round-trips.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "radicsum/experiments.hpp"

namespace radicsum::report {

enum class OutputFormat { table, csv, json };

/// "table", "csv" or "json".
std::optional<OutputFormat> parse_format(std::string_view name);

/// Version stamped into every JSON document as "schema_version".
inline constexpr int kSchemaVersion = 1;

/// Bit-exact CSV headers.
inline constexpr std::string_view kVerifyCsvHeader = "claim,n,r,value,target,abs_error,status";
inline constexpr std::string_view kBenchCsvHeader = "n,r,exact,approx,phi,exact_ns,approx_ns";

/// %.17g; "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double x);

/// Empty cells render as "" in CSV/table output and null in JSON.
using Cell = std::variant<std::monostate, std::uint64_t, double, std::string>;

struct Table {
  std::string kind;  ///< JSON "kind" field
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_table(std::ostream& out, const Table& table, OutputFormat format);

void write_claims(std::ostream& out, std::span<const ClaimReport> reports, OutputFormat format);

void write_bench(std::ostream& out, const BenchReport& bench, OutputFormat format);

}  // namespace radicsum::report
