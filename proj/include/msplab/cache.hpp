#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "msplab/report.hpp"

namespace msplab {

struct SchemaMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kCacheSchema = 1;

struct CacheKey {
    std::string module, op;
    int target = 0, N = 0, order = 0, zdepth = 0;
    std::string str() const;
};

struct CacheEntry {
    int schema_version = kCacheSchema;
    CacheKey key;
    json payload;
};

// $MSPLAB_CACHE if set, else empty
std::string default_cache_dir();

// write to a temp file in dir, then rename over the final name
void cache_store(const std::string& dir, const CacheEntry& e);
// nullopt when absent; SchemaMismatch on version, key or checksum disagreement
std::optional<CacheEntry> cache_load(const std::string& dir, const CacheKey& key);

}  // namespace msplab
