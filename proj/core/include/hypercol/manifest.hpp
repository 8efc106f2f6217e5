#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypercol {

inline constexpr const char * tool_version = "0.1.0";

struct FileDigest {
  std::string path;
  /// Lowercase hex SHA-256 of the file contents.
  std::string sha256;
};

auto sha256_hex(const std::string & bytes) -> std::string;
auto digest_file(const std::filesystem::path & path) -> FileDigest;

/// Record of one tool invocation. Everything except the "volatile" section
/// (timestamp and wall time) is reproducible from the command and seed.
struct Manifest {
  std::vector<std::string> command;
  std::optional<std::uint64_t> seed;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::uint64_t solver_nodes = 0;
  double wall_seconds = 0.0;
  /// Named verdicts and figures, serialized as JSON text values.
  std::map<std::string, std::string> verdicts;

  auto to_json() const -> std::string;
  static auto from_json(const std::string & text) -> Manifest;
};

/// Paths of outputs that are missing or whose digest changed.
auto stale_outputs(const Manifest & manifest, const std::filesystem::path & base = {}) -> std::vector<std::string>;

} // namespace hypercol
