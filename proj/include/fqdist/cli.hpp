#pragma once

// Batch commands behind the fqdist executable. Each command returns a JSON
// report (and optionally CSV rows) plus the process exit code:
//   0 all checks pass, 2 an identity or bound check failed, 1 usage or I/O error.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqdist/set_factory.hpp"

namespace fqdist::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Json, Csv };

// Generator described on the command line; turned into a GenSpec once the
// field is known.
struct SetSource {
  std::string kind = "random";  // random|line|subspace|sphere|full|lift|file
  std::uint64_t size = 0;
  std::uint64_t seed = 0;
  std::string offset;     // "x1,...,xd"
  std::string direction;  // line
  std::string basis;      // subspace: "v1;v2;..."
  std::int64_t radius = 0;
  std::filesystem::path file;
};

struct RunConfig {
  std::string command;
  std::int64_t p = 3;
  std::int64_t ell = 1;
  int d = 2;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds;
  int trials = 200;
  std::uint64_t size_min = 1;
  std::uint64_t size_max = 0;  // 0 means q^d
  std::uint64_t size = 0;
  std::string strategy = "greedy";
  int restarts = 100;
  std::uint64_t node_budget = kExhaustiveNodeBudget;
  std::optional<SetSource> source;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> witness;
  std::optional<std::filesystem::path> kernel_cache;
  Format format = Format::Json;
  unsigned threads = 0;
};

struct CommandResult {
  nlohmann::ordered_json report;
  std::string csv;  // verify only
  int exit_code = 0;
};

nlohmann::ordered_json config_json(const RunConfig& cfg);

// Materializes a SetSource. Throws fqdist::Error.
PointSet build_set(const FieldPtr& field, int d, const SetSource& src);

CommandResult cmd_gauss(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_analyze(const RunConfig& cfg);
CommandResult cmd_search_square(const RunConfig& cfg);
CommandResult cmd_coverage(const RunConfig& cfg);

// Dispatches on cfg.command; fqdist::Error becomes exit code 1 with an error report.
CommandResult run(const RunConfig& cfg);

}  // namespace fqdist::cli
