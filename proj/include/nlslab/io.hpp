// io.hpp -- binary field snapshots, deterministic text emission, and run
// manifests.
//
// Snapshot format (little endian): magic "NLSF", version u32, then d, n, h
// each as f64, then n^d (re, im) f64 pairs in row-major site order.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

inline constexpr std::uint32_t kFieldFormatVersion = 1;

void save_field(const Field& f, const std::filesystem::path& path);
Field load_field(const std::filesystem::path& path);

// Fixed 17-significant-digit emission; the same double always prints the same
// bytes, which is what makes rerun outputs byte-identical.
std::string fmt17(double x);

std::uint64_t fnv1a(std::string_view s);

struct RunManifest {
  std::string command_line;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::string code_version;
  std::vector<std::string> cache_keys;
  std::vector<std::string> outputs;
  double wall_seconds = 0.0;

  void write(const std::filesystem::path& path) const;
};

inline constexpr const char* kCodeVersion = "nlslab 1.0.0";

}  // namespace nlslab
