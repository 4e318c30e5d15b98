#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "guessbench/trace.hpp"

namespace guessbench {

// One ReasoningTrace per line. Lines that fail to parse (for example a
// record truncated by a crash) are skipped and counted.
struct TraceFile {
  std::vector<ReasoningTrace> traces;
  int skipped_lines = 0;
};

TraceFile read_trace_file(const std::filesystem::path& path);

// Rewrites a file with traces ordered by episode index, via a temp file.
void write_trace_file(const std::filesystem::path& path, std::vector<ReasoningTrace> traces);

std::string trace_line(const ReasoningTrace& trace);

// Reads every *.jsonl under dir; keyed and sorted by cell, then episode index.
// A directory holding a traces/ subdirectory is also accepted.
std::map<std::string, std::vector<ReasoningTrace>> read_trace_dir(const std::filesystem::path& dir);

// Locates traces/ for a run directory or returns dir itself.
std::filesystem::path trace_dir_of(const std::filesystem::path& dir);

}  // namespace guessbench
