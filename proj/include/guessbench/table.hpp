#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace guessbench {

// A metrics table at full precision. Cells hold numbers, strings, booleans
// or null (a gap, or "N.A." where the layout has no value).
struct Table {
  Table() = default;
  Table(std::string n, std::string t, std::vector<std::string> c)
      : name(std::move(n)), title(std::move(t)), columns(std::move(c)) {}

  std::string name;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();

  void add_row(std::vector<nlohmann::ordered_json> row);
  int column(const std::string& name) const;  // -1 when absent

  nlohmann::ordered_json to_json() const;
  static Table from_json(const nlohmann::json& j);
};

struct MetricsBundle {
  std::vector<Table> tables;

  const Table* find(const std::string& name) const;
  Table& add(Table table);

  void write(const std::filesystem::path& file) const;
  static MetricsBundle read(const std::filesystem::path& file);
  // Merges every *.json bundle found in a directory, sorted by file name.
  static MetricsBundle read_dir(const std::filesystem::path& dir);
};

// Optional numbers become JSON null.
template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace guessbench
