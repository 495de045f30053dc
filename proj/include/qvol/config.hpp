#pragma once

// Run configuration shared by the CLI commands. Defaults match the identity
// suite: q in {1/4, 1/2}, k in -4..6, budget 1e-30, 60 digits.

#include "qvol/rat.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qvol {

enum class Format { Json, Latex, Text };

Format parse_format(const std::string& s);
std::string format_name(Format f);

struct Config {
  std::vector<Rat> q_samples{make_rat(1, 4), make_rat(1, 2)};
  int k_min = -4;
  int k_max = 6;
  Rat budget = parse_rat("1e-30");
  unsigned precision = 60;
  std::filesystem::path cache_dir;  // empty: default_cache_dir()
  Format format = Format::Text;

  /// Throws UsageError on a violated invariant (budget > 0, precision >= 30, q in (0,1), k_min <= k_max).
  void validate() const;
};

/// "a..b" or a single integer "a".
std::pair<int, int> parse_k_range(const std::string& s);

/// Overlays fields present in a JSON config file onto `base`.
/// Keys: q_samples (["1/4", ...]), k_range ("-4..6"), budget, precision, cache_dir, format.
Config load_config(const std::filesystem::path& path, Config base = {});

}  // namespace qvol
