#pragma once

// On-disk cache of pipeline results: one JSON document per discriminant,
// <dir>/dNNNN.json, coefficients as exact decimal strings lowest degree first.

#include <filesystem>
#include <optional>
#include <string>

#include "rr5/pipeline.hpp"

namespace rr5::cache {

inline constexpr int kSchemaVersion = 1;

std::string render(const pipeline::PipelineResult& r);

/// Throws DomainError on malformed text or an unknown schema version.
pipeline::PipelineResult parse(const std::string& text);

/// Field-by-field equality, including flags and the discriminant report.
bool same(const pipeline::PipelineResult& a, const pipeline::PipelineResult& b);

class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  /// RR5_CACHE_DIR when set, else `flag` when given, else ".rr5-cache".
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(long d) const;

  std::optional<pipeline::PipelineResult> load(long d) const;

  /// Write to a temporary file in the same directory, then rename over the target.
  void store(const pipeline::PipelineResult& r) const;

  /// Cached result, or run_pipeline(d) stored on the way out; unreadable entries are replaced.
  pipeline::PipelineResult fetch(long d) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace rr5::cache
