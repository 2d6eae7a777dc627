#pragma once

// Named property suites over random samples and exhaustive small searches.

#include "tfg/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tfg {

struct SuiteFailure {
  int index = 0;
  std::string message;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<SuiteFailure> failures;  // sorted by case index
  Json info = Json::object();
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

// Failures are capped at this many stored messages; `cases` still counts all.
inline constexpr std::size_t kMaxStoredFailures = 20;

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
// Fixture used when no triple is supplied.
std::string default_fixture(const std::string& suite);
// Unknown suite names throw ParseError.
SuiteReport run_suite(const std::string& name, const std::optional<Triple>& triple, std::uint64_t seed, int iters);
Json report_to_json(const SuiteReport& r, bool timing);

// All endomorphisms of g, sorted by image table.
std::vector<GroupMap> endomorphisms(const GroupPtr& g);
// Elements killed by every long enough word map: those from which no cycle
// of non-identity elements is reachable along g ↦ α_i(g).
std::vector<int> eventual_kernel(const Triple& t);

// Depth-3 loops commuting with the given elements of V, as value arrays
// over the uniform depth-3 partition.
std::vector<std::vector<int>> depth3_commutant(const Triple& t, const std::vector<VElement>& gens);

}  // namespace tfg
