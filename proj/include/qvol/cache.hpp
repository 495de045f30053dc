#pragma once

// On-disk, content-addressed store for computed documents. An entry lives in
// <dir>/<sha256(key)>.json and carries its key, the engine version and a hash
// of the payload; anything that fails those checks is treated as a miss.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace qvol {

inline constexpr std::string_view kEngineVersion = "qvol-1.0";

std::string sha256_hex(std::string_view data);

/// $QVOL_CACHE_DIR, else $XDG_CACHE_HOME/qvol, else ~/.cache/qvol.
std::filesystem::path default_cache_dir();

class DiskCache {
 public:
  enum class Lookup { Hit, Miss, Corrupt, Stale };

  explicit DiskCache(std::filesystem::path dir, std::string version = std::string(kEngineVersion));

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(std::string_view key) const;

  /// Payload for key, or nullopt. `status` (if given) tells why.
  std::optional<std::string> load(std::string_view key, Lookup* status = nullptr) const;
  /// Atomic: written to a temporary file in the same directory, then renamed.
  void store(std::string_view key, std::string_view payload) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace qvol
