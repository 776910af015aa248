#include "radicsum/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

namespace radicsum::report {

namespace {

using nlohmann::json;

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      c);
}

json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? json(v) : json(nullptr);
        } else {
          return json(v);
        }
      },
      c);
}

Cell optional_cell(const std::optional<double>& x) { return x ? Cell{*x} : Cell{}; }

void write_csv_rows(std::ostream& out, const std::vector<std::vector<Cell>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << cell_text(row[i]);
    }
    out << '\n';
  }
}

void write_aligned(std::ostream& out, const std::vector<std::string>& columns, const std::vector<std::vector<Cell>>& rows,
                   std::string_view indent = "") {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  std::vector<std::vector<std::string>> text;
  for (const auto& row : rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << indent;
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << fmt::format("{:<{}}", line[i], width[i]);
      out << (i + 1 < line.size() ? "  " : "\n");
    }
  };
  emit(columns);
  for (const auto& line : text) emit(line);
}

std::vector<std::vector<Cell>> claim_rows(const ClaimReport& report) {
  std::vector<std::vector<Cell>> rows;
  const std::string name(claim_name(report.claim));
  for (const auto& rec : report.details) {
    rows.push_back({name, rec.n, optional_cell(rec.r), rec.value, rec.target, rec.abs_error,
                    std::string(status_name(rec.status))});
  }
  return rows;
}

const std::vector<std::string> kVerifyColumns{"claim", "n", "r", "value", "target", "abs_error", "status"};
const std::vector<std::string> kBenchColumns{"n", "r", "exact", "approx", "phi", "exact_ns", "approx_ns"};

json claim_json(const ClaimReport& report) {
  json j;
  j["claim"] = std::string(claim_name(report.claim));
  j["status"] = std::string(status_name(report.status));
  j["grid"] = {{"n_values", report.grid.n_values}, {"r_values", report.grid.r_values}};
  j["worst_case"] = {{"n", report.worst_case.n},
                     {"r", cell_json(optional_cell(report.worst_case.r))},
                     {"value", cell_json(report.worst_case.value)}};
  j["notes"] = report.notes;
  json records = json::array();
  for (const auto& row : claim_rows(report)) {
    json rec;
    for (std::size_t i = 0; i < kVerifyColumns.size(); ++i) rec[kVerifyColumns[i]] = cell_json(row[i]);
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  return j;
}

void write_claim_summary(std::ostream& out, const ClaimReport& report) {
  out << fmt::format("{:<20} {:<9} worst: n={} r={} value={}\n", claim_name(report.claim), status_name(report.status),
                     report.worst_case.n, cell_text(optional_cell(report.worst_case.r)),
                     format_number(report.worst_case.value));
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
}

std::vector<std::vector<Cell>> bench_rows(const BenchReport& bench) {
  std::vector<std::vector<Cell>> rows;
  for (const auto& row : bench.rows) {
    rows.push_back({row.n, row.r, row.exact, row.approx, row.phi, row.exact_ns, row.approx_ns});
  }
  return rows;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
      out << '\n';
      write_csv_rows(out, table.rows);
      return;
    }
    case OutputFormat::json: {
      json records = json::array();
      for (const auto& row : table.rows) {
        json rec;
        for (std::size_t i = 0; i < table.columns.size(); ++i) rec[table.columns[i]] = cell_json(row[i]);
        records.push_back(std::move(rec));
      }
      const json doc{{"schema_version", kSchemaVersion}, {"kind", table.kind}, {"records", records}};
      out << doc.dump(2) << '\n';
      return;
    }
    case OutputFormat::table:
      write_aligned(out, table.columns, table.rows);
      return;
  }
}

void write_claims(std::ostream& out, std::span<const ClaimReport> reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      out << kVerifyCsvHeader << '\n';
      for (const auto& r : reports) write_csv_rows(out, claim_rows(r));
      return;
    case OutputFormat::json: {
      json claims = json::array();
      for (const auto& r : reports) claims.push_back(claim_json(r));
      const json doc{{"schema_version", kSchemaVersion}, {"kind", "verify"}, {"claims", claims}};
      out << doc.dump(2) << '\n';
      return;
    }
    case OutputFormat::table:
      for (const auto& r : reports) {
        write_claim_summary(out, r);
        write_aligned(out, kVerifyColumns, claim_rows(r), "    ");
        out << '\n';
      }
      return;
  }
}

void write_bench(std::ostream& out, const BenchReport& bench, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      out << kBenchCsvHeader << '\n';
      write_csv_rows(out, bench_rows(bench));
      return;
    case OutputFormat::json: {
      json records = json::array();
      for (const auto& row : bench_rows(bench)) {
        json rec;
        for (std::size_t i = 0; i < kBenchColumns.size(); ++i) rec[kBenchColumns[i]] = cell_json(row[i]);
        records.push_back(std::move(rec));
      }
      const json doc{{"schema_version", kSchemaVersion},
                     {"kind", "bench"},
                     {"timing_available", bench.timing_available},
                     {"claim", claim_json(bench.claim)},
                     {"records", records}};
      out << doc.dump(2) << '\n';
      return;
    }
    case OutputFormat::table:
      write_claim_summary(out, bench.claim);
      write_aligned(out, kBenchColumns, bench_rows(bench), "    ");
      return;
  }
}

}  // namespace radicsum::report
