#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "guessbench/table.hpp"

namespace guessbench {

// Round half to even at the given number of decimals.
double round_half_even(double x, int decimals = 2);

// Text form used in CSV files and figure labels: two decimals for reals,
// plain integers, "N.A." for null.
std::string format_value(const nlohmann::ordered_json& v);

void write_csv(std::ostream& out, const Table& table);
nlohmann::ordered_json rounded_json(const Table& table);

struct ReportOptions {
  bool svg = false;
};

// Writes <name>.csv and <name>.json for every table and, with svg, the
// figures whose source tables are present. Returns the files written, in
// order. Pure rendering: every number shown comes from a table cell.
std::vector<std::filesystem::path> render_report(const MetricsBundle& metrics,
                                                 const std::filesystem::path& out_dir,
                                                 const ReportOptions& options = {});

}  // namespace guessbench
