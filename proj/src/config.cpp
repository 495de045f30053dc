#include "qvol/config.hpp"

#include <json.hpp>

#include <fstream>

namespace qvol {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  if (s == "text") return Format::Text;
  throw UsageError("unknown format '" + s + "' (expected json, latex or text)");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Latex: return "latex";
    case Format::Text: return "text";
  }
  return "text";
}

void Config::validate() const {
  if (budget <= 0) throw UsageError("budget must be positive");
  if (precision < 30) throw UsageError("precision must be at least 30 digits");
  if (k_min > k_max) throw UsageError("empty k range");
  if (q_samples.empty()) throw UsageError("no q samples");
  for (const Rat& q : q_samples)
    if (q <= 0 || q >= 1) throw UsageError("q sample " + to_string(q) + " is outside (0,1)");
}

std::pair<int, int> parse_k_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw UsageError("bad k range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int k = to_int(s);
    return {k, k};
  }
  const int a = to_int(s.substr(0, dots));
  const int b = to_int(s.substr(dots + 2));
  if (a > b) throw UsageError("bad k range '" + s + "'");
  return {a, b};
}

Config load_config(const std::filesystem::path& path, Config base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path.string());
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw UsageError("config " + path.string() + " is not a JSON object");
  try {
    if (j.contains("q_samples")) {
      base.q_samples.clear();
      for (const auto& q : j["q_samples"]) base.q_samples.push_back(parse_rat(q.get<std::string>()));
    }
    if (j.contains("k_range")) std::tie(base.k_min, base.k_max) = parse_k_range(j["k_range"].get<std::string>());
    if (j.contains("budget")) base.budget = parse_rat(j["budget"].get<std::string>());
    if (j.contains("precision")) base.precision = j["precision"].get<unsigned>();
    if (j.contains("cache_dir")) base.cache_dir = j["cache_dir"].get<std::string>();
    if (j.contains("format")) base.format = parse_format(j["format"].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + path.string() + ": " + e.what());
  }
  base.validate();
  return base;
}

}  // namespace qvol
