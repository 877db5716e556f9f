#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chevcert/irregular.hpp"

namespace chevcert {

inline constexpr const char* kCacheDirEnvVar = "CHEVCERT_CACHE_DIR";

// JSON-lines cache of irregular-index records, one object per prime, sorted
// by p, replaced atomically via rename. Records from other algorithm versions
// and corrupt lines are dropped (the latter with a warning) and recomputed.
class IrregularCache {
 public:
  explicit IrregularCache(std::filesystem::path dir);

  std::filesystem::path file() const;
  std::map<long long, IrregularData> load(std::vector<std::string>* warnings = nullptr) const;
  void store(const std::map<long long, IrregularData>& records) const;

 private:
  std::filesystem::path dir_;
};

// Irregular data for every prime in [lo, hi], from the cache where possible.
// Freshly computed records are merged back. `cache` may be null (no
// persistence); `computed` reports how many primes were computed this call.
std::map<long long, IrregularData> scan_irregular(IrregularCache* cache, long long lo,
                                                  long long hi, int jobs = 1,
                                                  size_t* computed = nullptr,
                                                  std::vector<std::string>* warnings = nullptr);

}  // namespace chevcert
