#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "guessbench/game.hpp"

namespace guessbench {

enum class SampleSource { external_csv, synthetic_fixture, simulation };
std::string_view to_string(SampleSource source);

// A labelled collection of guesses: "student", "expert", "pooled" or
// "agent:<config-id>".
struct CohortSample {
  std::string label;
  std::vector<int> guesses;
  SampleSource source = SampleSource::external_csv;
};

struct HumanCohorts {
  CohortSample student;
  CohortSample expert;

  // Student guesses followed by expert guesses.
  CohortSample pooled() const;
};

// CSV with header "cohort,guess". Throws DataError (with the first bad line
// number) for malformed rows, unknown cohorts or out-of-range guesses.
HumanCohorts parse_human_csv(std::istream& in, const GameSpec& spec,
                             SampleSource source = SampleSource::external_csv);
HumanCohorts load_human_csv(const std::filesystem::path& path, const GameSpec& spec,
                            SampleSource source = SampleSource::external_csv);
void write_human_csv(std::ostream& out, const HumanCohorts& cohorts);

struct CohortSummary {
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> sd;        // undefined for n < 2
  std::optional<double> skewness;  // undefined for n < 3 or zero spread
  double zero_rate = 0.0;
  int min = 0;
  int max = 0;
};

// Throws DomainError for an empty sample.
CohortSummary summarize(const CohortSample& sample);
nlohmann::ordered_json to_json(const CohortSummary& summary);

struct FixtureTarget {
  std::string cohort;  // "student" or "expert"
  int n = 0;
  int zeros = 0;
  double mean = 0.0;
  double sd = 0.0;
  double skewness = 0.0;
  // Mean absolute deviation from the mean; steers the Levene statistic.
  std::optional<double> mad;
};

struct FixtureSpec {
  std::uint64_t seed = 0;
  GameSpec game;
  std::vector<FixtureTarget> targets;
  double tolerance = 0.02;  // relative, on mean and sd
  int iterations = 400000;

  static FixtureSpec from_json(const nlohmann::json& j);
};

// Deterministic synthetic cohorts matching the targets' zero counts exactly
// and mean/sd within the relative tolerance; skewness is fitted as closely
// as the search allows. Throws DataError describing any missed target.
HumanCohorts make_fixture(const FixtureSpec& spec);

}  // namespace guessbench
