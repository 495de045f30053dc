#include "qvol/cache.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qvol {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("QVOL_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "qvol";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "qvol";
  return std::filesystem::temp_directory_path() / "qvol-cache";
}

DiskCache::DiskCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::filesystem::path DiskCache::entry_path(std::string_view key) const {
  return dir_ / (sha256_hex(key) + ".json");
}

std::optional<std::string> DiskCache::load(std::string_view key, Lookup* status) const {
  auto set = [&](Lookup s) {
    if (status) *status = s;
  };
  const auto path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    set(Lookup::Miss);
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("payload") ||
      !j.contains("payload_sha256") || !j.contains("engine_version") || !j["payload"].is_string()) {
    set(Lookup::Corrupt);
    return std::nullopt;
  }
  if (j["key"] != key) {  // hash collision or a hand-edited file
    set(Lookup::Corrupt);
    return std::nullopt;
  }
  if (j["engine_version"] != version_) {
    set(Lookup::Stale);
    return std::nullopt;
  }
  std::string payload = j["payload"].get<std::string>();
  if (sha256_hex(payload) != j["payload_sha256"]) {
    set(Lookup::Corrupt);
    return std::nullopt;
  }
  set(Lookup::Hit);
  return payload;
}

void DiskCache::store(std::string_view key, std::string_view payload) const {
  std::filesystem::create_directories(dir_);
  nlohmann::ordered_json j{{"key", key},
                           {"engine_version", version_},
                           {"payload_sha256", sha256_hex(payload)},
                           {"payload", payload}};
  const auto final_path = entry_path(key);
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << final_path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << "." << counter++;
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << j.dump() << "\n";
    if (!out.flush()) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot install cache entry " + final_path.string());
  }
}

}  // namespace qvol
