#include "result_cache.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>
#include <unistd.h>

#include "json.hpp"

#include "braidhom/errors.hpp"
#include "braidhom/homology.hpp"

namespace braidhom::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string CacheKey::digest() const {
  json j{{"graph", canonical_graph},  {"variant", variant_name(variant)}, {"degree", degree},
         {"weight", weight},          {"modulus", modulus},              {"engine", kEngineVersion}};
  return sha256_hex(j.dump());
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::optional<CacheEntry> ResultCache::load(const CacheKey& key) const {
  std::ifstream in(dir_ / (key.digest() + ".json"));
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("moduli")) return std::nullopt;
  CacheEntry e;
  for (const auto& m : j["moduli"]) e.moduli.emplace_back(m.get<std::string>());
  e.compute_seconds = j.value("compute_seconds", 0.0);
  return e;
}

void ResultCache::store(const CacheKey& key, const CacheEntry& entry) const {
  json j;
  j["moduli"] = json::array();
  for (const auto& m : entry.moduli) j["moduli"].push_back(m.str());
  j["compute_seconds"] = entry.compute_seconds;
  j["group"] = AbelianGroup(entry.moduli).to_string();
  j["key"] = {{"variant", variant_name(key.variant)},
              {"degree", key.degree},
              {"weight", key.weight},
              {"modulus", key.modulus},
              {"engine", kEngineVersion}};

  const std::string name = key.digest() + ".json";
  std::ostringstream tmp_name;
  tmp_name << "." << name << "." << ::getpid() << "." << std::random_device{}() << ".tmp";
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache entry in " + dir_.string());
    out << j.dump(2) << "\n";
    if (!out.flush()) throw Error("cannot write cache entry in " + dir_.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, dir_ / name, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot publish cache entry " + name);
  }
}

}  // namespace braidhom::cli
