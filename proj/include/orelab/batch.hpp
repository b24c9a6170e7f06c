#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "orelab/catalog.hpp"
#include "orelab/report.hpp"

namespace orelab {

struct BatchEntry {
  std::string spec;
  /// 0 ok, 1 a mathematical check failed, 2 bad spec, 3 size guard.
  int status = 0;
  std::string error;
  std::size_t order = 0;
  std::size_t max_den = 0;
  std::size_t radical = 0;
  bool localizable = false;
  bool decomposable = false;
  std::size_t failed_checks = 0;
  /// The full report for this spec in the requested format.
  std::string report;
};

struct BatchResult {
  std::vector<BatchEntry> entries;
  /// Fixed-width table, identical for every degree of parallelism.
  std::string summary;
  /// Status of the first failing entry, 0 if none failed.
  int exit_code = 0;
};

/// Profiles every spec on a pool of `jobs` threads. Per-spec errors are
/// recorded and the run continues.
BatchResult run_batch(const BatchManifest& manifest, unsigned jobs, Format format, const Limits& limits = {});

/// Writes one report per spec plus summary.txt into `dir`.
void write_batch(const BatchResult& result, const std::filesystem::path& dir, Format format);

}  // namespace orelab
