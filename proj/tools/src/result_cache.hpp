#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "braidhom/abelian_group.hpp"
#include "braidhom/chain.hpp"

namespace braidhom::cli {

struct CacheKey {
  std::string canonical_graph;
  ComplexVariant variant = ComplexVariant::automatic;  ///< resolved, never automatic
  int degree = 0;
  int weight = 0;
  int modulus = 0;

  /// Hex SHA-256 of the key fields and the engine version.
  std::string digest() const;
};

struct CacheEntry {
  std::vector<Integer> moduli;   ///< presentation of the group
  double compute_seconds = 0;    ///< time of the run that produced the entry
};

/// Directory of JSON files named by key digest. Writers go through a
/// temporary file and rename, so readers never see partial entries.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<CacheEntry> load(const CacheKey& key) const;
  void store(const CacheKey& key, const CacheEntry& entry) const;
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

std::string sha256_hex(const std::string& data);

}  // namespace braidhom::cli
